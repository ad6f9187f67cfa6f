#pragma once

#include "catlim/holim.hpp"

namespace catlim {

struct FinGroup {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mul;  // mul[g][h] = g * h
    int identity = -1;

    int op(int g, int h) const { return mul[g][h]; }
    int inverse(int g) const;
    std::size_t order() const { return elements.size(); }
};

ValidationReport validate_group(const FinGroup& g);
// all subgroups as sorted element-index lists, ordered by (size, lexicographic)
std::vector<std::vector<int>> subgroups(const FinGroup& g);
FinGroup subgroup_group(const FinGroup& g, const std::vector<int>& elems);

struct CategoryGAction {
    FinGroup group;
    CatPtr carrier;
    std::vector<Functor> action;  // per group element
};
ValidationReport validate_g_action(const CategoryGAction& a);

// strictly fixed objects and morphisms under a set of group elements
struct Subcategory {
    CatPtr cat;
    Functor inclusion;
    std::vector<int> object_of;    // sub object -> ambient object
    std::vector<int> morphism_of;  // sub morphism -> ambient morphism
};
Subcategory fixed_category(const CategoryGAction& a, const std::vector<int>& subgroup_elems);

struct GDiagram {
    CategoryGAction base_action;
    Diagram diagram;
    // structure[g][i] : X_i -> X_{g i}, natural in i, with
    // (gh)_i = g_{h i} o h_i and 1 = id
    std::vector<std::vector<Functor>> structure;
};
ValidationReport validate_g_diagram(const GDiagram& x);

GDiagram constant_g_diagram(const CategoryGAction& base, const CatPtr& value);

// the canonical G-structure on K/(-) for a G-category K
GDiagram overcat_gdiagram(const CategoryGAction& a, const OvercatDiagram& over);

// conjugation action on Hom(Y, X); hom must be hom_category(y.diagram, x.diagram)
CategoryGAction conjugation_action_on_hom(const GDiagram& y, const GDiagram& x,
                                          const HomCategory& hom);

// setwise stabilizer of a set of base objects
std::vector<int> stabilizer(const CategoryGAction& a, const std::vector<int>& objs);

// restriction of an ambient action to a maps-out slice (requires the source set
// to be setwise stable)
CategoryGAction slice_action(const CategoryGAction& ambient, const FinGroup& group,
                             const std::vector<int>& subgroup_elems, const SliceCategory& slice);

// H-structures on the matching data at an H-fixed object
struct EquivariantMatching {
    MatchingFunctor matching;     // m_i
    FinGroup subgroup;
    CategoryGAction dom_action;   // H on X_i
    CategoryGAction hom_action;   // conjugation H-action on the hom category
    Subcategory fixed_dom;        // X_i^H
    Subcategory fixed_cod;        // Hom(...)^H
    Functor fun;                  // m_i^H
    bool equivariant = false;     // m_i(h . x) = h . m_i(x) for all h, x
};
EquivariantMatching equivariant_matching(const GDiagram& x, int i,
                                         const std::vector<int>& subgroup_elems, Budget& budget);

struct EquivariantReedyBlock {
    std::vector<std::string> subgroup;  // element ids
    std::vector<ProxyCheckRow> rows;
    bool pass = true;
};
struct EquivariantReedyReport {
    bool pass = true;
    std::vector<EquivariantReedyBlock> blocks;
};
EquivariantReedyReport equivariant_reedy_check(const GDiagram& x, Budget& budget);

// induced action on the Grothendieck construction of the underlying diagram
CategoryGAction grothendieck_g_action(const GDiagram& y, const Grothendieck& gr);

// G_U-equivariance of the Grothendieck comparison isomorphism
struct LemmaEquivariance {
    std::vector<int> stabilizer_elems;
    bool ok = true;
    std::vector<std::string> failures;
};
LemmaEquivariance lemma_iso_equivariance(const GDiagram& x, const LemmaIso& iso, Budget& budget);

}  // namespace catlim
