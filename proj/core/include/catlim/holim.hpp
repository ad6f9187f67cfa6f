#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "catlim/fincat.hpp"
#include "catlim/simpl.hpp"

namespace catlim {

// ---- hom-categories of diagrams ------------------------------------------------
//
// An object of Hom(Y, X) is a strictly natural family of functors
// Phi_i : Y_i -> X_i (X_a o Phi_i = Phi_j o Y_a for every base morphism
// a : i -> j). A morphism is a modification: a family of natural
// transformations lambda_i : Phi_i => Phi'_i with
// X_a * lambda_i = lambda_j * Y_a (whiskering equality).

struct DiagramMap {
    std::vector<Functor> component;  // per base object
    std::string key() const;
};

struct Modification {
    int src = -1, tgt = -1;          // object indices in the hom category
    std::vector<NatTrans> component; // per base object
    std::string key() const;
};

struct HomCategory {
    Diagram source, target;
    CatPtr cat;
    std::vector<DiagramMap> objects;
    std::vector<Modification> morphisms;
    std::map<std::string, int> object_by_key;
    std::map<std::string, int> morphism_by_key;

    int find_object(const DiagramMap& m) const;
    int find_morphism(const Modification& m) const;
};

HomCategory hom_category(const Diagram& y, const Diagram& x, Budget& budget);

// ---- diagram builders -----------------------------------------------------------

struct OvercatDiagram {
    CatPtr base;
    std::vector<SliceCategory> slices;  // K/k per object k
    Diagram diagram;                    // K/(-) : K -> Cat
};
OvercatDiagram overcat_diagram(const CatPtr& k);

// restriction of x along a projection functor into its base
Diagram restrict_diagram(const Diagram& x, const Functor& proj);

// ---- matching functors -----------------------------------------------------------

struct MatchingFunctor {
    int object = -1;        // the anchor object i of the base
    SliceCategory strict;   // i < I
    OvercatDiagram over;    // (i<I)/(-)
    Diagram restricted;     // X_{i<}
    HomCategory hom;        // Hom((i<I)/(-), X_{i<})
    Functor fun;            // m_i : X_i -> hom.cat
};
MatchingFunctor matching_functor(const Diagram& x, int i, Budget& budget);

// ---- Reedy quasi-fibrancy --------------------------------------------------------

struct ProxyCheckRow {
    std::string condition;             // which morphism of which hom category
    std::vector<std::string> objects;  // the comma categories involved
    bool pass = false;
    std::string source_homology;
    std::string target_homology;
};

struct ReedyReport {
    bool pass = true;
    std::vector<ProxyCheckRow> rows;
};
ReedyReport reedy_qf_check(const Diagram& x, Budget& budget);

// proxy rows for every morphism of the hom category downstream of a matching
// functor: does m/(-) send it to a homology equivalence of comma nerves?
std::vector<ProxyCheckRow> matching_proxy_rows(const MatchingFunctor& m,
                                               const std::string& condition_prefix, Budget& budget);
// same check for an arbitrary functor into a finite category
std::vector<ProxyCheckRow> proxy_rows_for_functor(const Functor& fun,
                                                  const std::string& condition_prefix,
                                                  Budget& budget);

// ---- Grothendieck construction ----------------------------------------------------

struct Grothendieck {
    Diagram input;
    CatPtr cat;
    std::vector<std::pair<int, int>> object_parts;            // (base object, vertex object)
    std::vector<std::array<int, 4>> morphism_parts;           // (src obj, tgt obj, alpha, delta)
    int find_object(int k, int x) const;
    int find_morphism(int src_obj, int alpha, int delta) const;
};
Grothendieck grothendieck(const Diagram& f);

// ---- Lemma: Hom over U<=I as a Grothendieck construction ---------------------------

struct FUData {
    std::vector<int> u_objs;  // U, ambient object indices (deterministic given order)
    UnionUnder uu;
    HomCategory hom_lt;                          // Hom((U<I)/(-), X_{U<})
    std::vector<MatchingFunctor> matching;       // m_u per u
    std::vector<std::vector<int>> restrict_obj;  // per u: hom_lt object -> H_u object
    std::vector<std::vector<int>> restrict_mor;  // per u: hom_lt morphism -> H_u morphism
    std::vector<std::vector<CommaCategory>> comma;  // [hom_lt object][u]  m_u / (Phi|_u)
    std::vector<NaryProductCategory> product;       // per hom_lt object
    Diagram diagram;                              // F_U as a Cat-valued diagram over hom_lt.cat
};
FUData f_u_functor(const Diagram& x, const std::vector<int>& u_objs, Budget& budget);

struct LemmaIso {
    FUData fu;
    HomCategory hom_le;  // Hom((U<=I)/(-), X_{U<=})
    Grothendieck groth;  // hom_lt integral F_U
    Functor theta;       // groth.cat -> hom_le.cat
    Functor theta_inv;
    bool roundtrip_identity = false;
};
LemmaIso lemma_indgrot_iso(const Diagram& x, const std::vector<int>& u_objs, Budget& budget);

// ---- homotopy limit model -----------------------------------------------------------

struct HolimModel {
    OvercatDiagram over;
    HomCategory hom;  // Hom(I/(-), X)
    bool nerve_defined = false;
    HomologyResult homology;
};
HolimModel holim_model(const Diagram& x, Budget& budget);

// ---- Barwick-Kan pullback model ------------------------------------------------------

struct BarwickKan {
    CatPtr cat;
    // object = (c, e, d, phi : f c -> d, psi : g e -> d)
    std::vector<std::array<int, 5>> object_parts;
    std::vector<std::array<int, 5>> morphism_parts;  // (src obj, tgt obj, u, w, v)
    int find_object(int c, int e, int phi, int psi) const;
};
BarwickKan barwick_kan(const Functor& f, const Functor& g);

// the cospan poset a -> m <- b with the two functors as transitions
Diagram cospan_diagram(const Functor& f, const Functor& g);

// pairwise isomorphism checks between the three pullback models (explicit
// functors, verified invertible)
struct BkCoincidence {
    bool hom_vs_bk = false;
    bool bk_vs_groth = false;
};
BkCoincidence barwick_kan_coincidence(const Functor& f, const Functor& g, Budget& budget);

}  // namespace catlim
