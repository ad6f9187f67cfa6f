#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catlim/common.hpp"
#include "catlim/fincat.hpp"

namespace catlim {

// ---- simplicial sets --------------------------------------------------------
//
// A finite simplicial set is stored on nondegenerate simplices. A possibly
// degenerate n-simplex is a pair (eta, ref): a monotone surjection
// eta : [n] ->> [m] (as the vector of its n+1 values) and a nondegenerate
// m-simplex ref, representing eta^*(ref). The surjection is the normal form of
// a degeneracy word: its repeat positions, read in decreasing order, are the
// word s_{j_1} ... s_{j_k} with j_1 > ... > j_k.

struct SimplexRef {
    int dim = -1;
    int idx = -1;
    bool operator==(const SimplexRef& o) const { return dim == o.dim && idx == o.idx; }
};

struct SimplicialValue {
    std::vector<int> eta;  // size = dim()+1, surjective onto [ref.dim]
    SimplexRef ref;

    int dim() const { return static_cast<int>(eta.size()) - 1; }
    bool nondegenerate() const { return static_cast<int>(eta.size()) - 1 == ref.dim; }
    bool operator==(const SimplicialValue& o) const { return eta == o.eta && ref == o.ref; }
    std::string key() const;
};

// Decreasing degeneracy word <-> repeat positions of the surjection.
std::vector<int> degeneracy_word(const std::vector<int>& eta);
std::vector<int> eta_from_word(const std::vector<int>& word, int value_dim);

class SimplicialSet;
using SSPtr = std::shared_ptr<const SimplicialSet>;

class SimplicialSet {
public:
    // ids[n][i] is the id of the i-th nondegenerate n-simplex
    std::vector<std::vector<std::string>> ids;
    // faces[n][i][k] is d_k of that simplex, for n >= 1
    std::vector<std::vector<std::vector<SimplicialValue>>> faces;

    int dim() const { return static_cast<int>(ids.size()) - 1; }
    int count(int n) const {
        return (n >= 0 && n <= dim()) ? static_cast<int>(ids[n].size()) : 0;
    }
    long long total_simplices(int n) const;  // including degenerate ones
    const SimplicialValue& face(SimplexRef s, int k) const { return faces[s.dim][s.idx][k]; }

    SimplicialValue value_of(SimplexRef s) const;          // identity surjection
    SimplicialValue face_of_value(const SimplicialValue& v, int k) const;
    SimplicialValue degeneracy_of_value(const SimplicialValue& v, int i) const;

    int index_of(int dim, const std::string& id) const;

    // simplicial identities d_i d_j = d_{j-1} d_i, checked on the stored tables
    ValidationReport validate() const;

    std::vector<int> f_vector() const;
    long long euler_characteristic() const;
};

// ---- maps -------------------------------------------------------------------

struct SimplicialMap {
    SSPtr source;
    SSPtr target;
    // image[n][i] = image of the i-th nondegenerate n-simplex, a target value of dimension n
    std::vector<std::vector<SimplicialValue>> image;

    SimplicialValue apply(const SimplicialValue& v) const;
    std::string key() const;
    bool operator==(const SimplicialMap& o) const { return image == o.image; }
};

ValidationReport check_simplicial_map(const SimplicialMap& f);
SimplicialMap identity_simplicial_map(const SSPtr& k);
SimplicialMap compose_simplicial_maps(const SimplicialMap& g, const SimplicialMap& f);
bool is_simplicial_iso(const SimplicialMap& f);

// ---- nerve ------------------------------------------------------------------

struct NerveResult {
    SSPtr ss;
    CatPtr category;
    // chains[n][i]: for n = 0 the singleton {object index}; for n >= 1 the
    // composable non-identity morphism indices of the i-th n-simplex
    std::vector<std::vector<std::vector<int>>> chains;

    int find_chain(int n, const std::vector<int>& chain) const;
    // normalizes a composable chain that may contain identities
    SimplicialValue value_of_chain(const std::vector<int>& vertex0_or_chain, bool is_vertex) const;
};

void ensure_nerve_admissible(const FinCategory& c);  // throws LoopyCategory
NerveResult nerve(const CatPtr& c);
SimplicialMap nerve_map(const Functor& f, const NerveResult& src, const NerveResult& tgt);

// number of n-simplices of the nerve (including degenerate), by path counting
long long nerve_total_simplices(const FinCategory& c, int n);

// ---- products ---------------------------------------------------------------

struct ProductSS {
    SSPtr ss;
    SSPtr left, right;
    // parts[n][i] = the pair of values the i-th nondegenerate n-simplex stands for
    std::vector<std::vector<std::pair<SimplicialValue, SimplicialValue>>> parts;
    std::map<std::string, SimplexRef> lookup_;

    // normal form of an arbitrary value pair (equal dims) as a product value
    SimplicialValue normalize(const SimplicialValue& a, const SimplicialValue& b) const;
};

ProductSS simplicial_product(const SSPtr& k, const SSPtr& l);
SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const ProductSS& src,
                          const ProductSS& tgt);
SSPtr standard_simplex(int n);  // Delta^n with vertex ids "0".."n"

// ---- integer linear algebra ---------------------------------------------------

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
bool mat_equal(const IntMat& x, const IntMat& y);
IntMat identity_mat(int n);
mpz_class determinant(const IntMat& m);  // Bareiss, exact

struct SmithResult {
    IntMat d;  // diagonal, d_1 | d_2 | ...
    IntMat u;  // unimodular, d = u * m * v
    IntMat v;
    std::vector<mpz_class> diagonal() const;
    int rank() const;
};
SmithResult smith_normal_form(const IntMat& m);

int bareiss_rank(const IntMat& m);  // fraction-free rank over Q; independent of SNF

// ---- chain complexes and homology ---------------------------------------------

struct ChainComplex {
    // boundary[n] : C_n -> C_{n-1}; boundary[0] has 0 rows
    std::vector<IntMat> boundary;
    std::vector<int> dims;  // rank of C_n

    ValidationReport validate() const;  // d o d = 0
};

ChainComplex normalized_chains(const SimplicialSet& k);

struct HomologyResult {
    std::vector<int> betti;
    std::vector<std::vector<mpz_class>> torsion;  // sorted per degree

    bool is_point() const;  // H_0 = Z, everything else 0
    bool is_zero() const;   // all groups vanish
    std::string brief() const;
};

HomologyResult homology(const ChainComplex& c);
HomologyResult homology_of(const SimplicialSet& k);

// Independent Betti computation from Bareiss ranks (no SNF involved).
std::vector<int> rational_betti(const ChainComplex& c);

struct InducedMapResult {
    std::vector<IntMat> chain_map;       // per degree
    HomologyResult source, target, cone;
    bool pi0_bijective = false;
    std::vector<bool> iso_in_degree;     // H_n isomorphism per degree
    bool homology_equivalence = false;
};

InducedMapResult induced_homology_map(const SimplicialMap& f);
bool is_homology_equivalence(const SimplicialMap& f);

// ---- map enumeration ------------------------------------------------------------

// All simplicial maps K -> Z, by backtracking over images of nondegenerate
// simplices in increasing dimension. If max_dim >= 0 only the simplices of K of
// dimension <= max_dim are mapped (maps of the truncation).
std::vector<SimplicialMap> enumerate_simplicial_maps(const SSPtr& k, const SSPtr& z, Budget& budget,
                                                     int max_dim = -1);

// all values of dimension n of a simplicial set, in canonical order
std::vector<SimplicialValue> all_values(const SimplicialSet& z, int n);

}  // namespace catlim
