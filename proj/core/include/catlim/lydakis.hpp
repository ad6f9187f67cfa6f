#pragma once

#include "catlim/holim.hpp"

namespace catlim {

// Compares the nerve of Hom(Y,X) with the simplicial mapping space of natural
// transformations Hom(NY,NX): in each dimension n an n-simplex of the mapping
// space is a natural family of simplicial maps NY_i x Delta^n -> NX_i.
class LydakisMachine {
public:
    LydakisMachine(const HomCategory& hom, Budget& budget);

    const HomCategory& hom() const { return *hom_; }
    const NerveResult& ny(int i) const { return ny_[i]; }
    const NerveResult& nx(int i) const { return nx_[i]; }
    const ProductSS& prod(int n, int i);  // NY_i x Delta^n
    const NerveResult& delta_nerve(int n);
    SSPtr delta(int n);

    // the family of simplicial maps attached to an n-chain of the hom category
    // (chain = n composable morphism indices; start_obj names the 0-chain case)
    std::vector<SimplicialMap> family_of_chain(int n, int start_obj, const std::vector<int>& chain);

    // all natural families in mapping dimension n
    std::vector<std::vector<SimplicialMap>> natural_families(int n, Budget& budget);

    // face operator on families: precompose with id x N(delta_k)
    std::vector<SimplicialMap> family_face(int n, const std::vector<SimplicialMap>& fam, int k);

    bool family_natural(int n, const std::vector<SimplicialMap>& fam);
    static std::string family_key(const std::vector<SimplicialMap>& fam);

    // all n-chains of the hom category, including identities; each as
    // (start object, morphism list)
    std::vector<std::pair<int, std::vector<int>>> all_chains(int n) const;

private:
    const HomCategory* hom_;
    std::vector<NerveResult> ny_, nx_;
    std::map<int, NerveResult> delta_;
    std::map<int, std::vector<ProductSS>> prod_;
    // expand a value over a nerve into a vertex/morphism walk
    struct Walk {
        std::vector<int> vertices;   // object indices, length q+1
        std::vector<int> morphisms;  // morphism indices (identity allowed), length q
    };
    Walk expand(const NerveResult& nv, const SimplicialValue& v) const;
};

struct LydakisReport {
    struct DimRow {
        int dim = 0;
        long long nerve_count = 0;
        long long mapping_count = 0;
        bool bijection = false;
        bool faces = false;
    };
    std::vector<DimRow> rows;
    bool pass = true;
};
LydakisReport lydakis_check(const Diagram& y, const Diagram& x, int up_to_dim, Budget& budget);

}  // namespace catlim
