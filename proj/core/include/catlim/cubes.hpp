#pragma once

#include "catlim/holim.hpp"

namespace catlim {

// Subset posets over a ground set drawn from {1..n} plus a basepoint '+'.
// Bit 0 of a mask is '+', bit i (i >= 1) is the element i. Objects are ordered
// by (size, mask); ids look like "{1,2,+}" with '+' last and "{}" for the
// empty subset.
std::string subset_name(unsigned mask);
unsigned ground_n_plus(int n);  // {1..n, +}
unsigned ground_n(int n);       // {1..n}

struct SubsetPoset {
    CatPtr cat;
    unsigned ground = 0;
    std::vector<unsigned> mask_of_object;
    int object_of_mask(unsigned m) const;
};
SubsetPoset subset_poset(unsigned ground, bool include_empty);
SubsetPoset subset_poset_masks(const std::vector<unsigned>& masks);

// ---- the cofinality functor ------------------------------------------------------

struct LambdaFunctor {
    int n = 0;
    std::vector<SubsetPoset> factors;  // P_0({i}_+)
    NaryProductCategory domain;
    SubsetPoset target;  // P_0(n_+)
    Functor lambda;
    std::vector<std::vector<unsigned>> tuple_of_object;  // domain object -> factor masks
};
LambdaFunctor lambda_functor(int n);

struct CofinalityRow {
    std::string object;
    bool contractible = false;
    std::string homology;
};
struct CofinalityReport {
    bool all_contractible = true;
    std::vector<CofinalityRow> rows;
};
// homology-proxy contractibility of every over category f/b
CofinalityReport cofinality_check(const Functor& f);

struct LambdaCofinalityReport {
    CofinalityReport over;  // lambda/S for every object S of P_0(n_+)
    struct CandidateRow {
        std::string subset;  // the object W of the target of the union functor
        bool well_defined = false;
        bool initial = false;
        bool under_contractible = false;
    };
    std::vector<CandidateRow> candidates;
    bool all_initial = true;
};
LambdaCofinalityReport lambda_cofinality(int n);

// ---- cubes -----------------------------------------------------------------------

Diagram constant_cube(int n, bool punctured, const CatPtr& value);

struct TotalFiberModel {
    MatchingFunctor matching;  // the quasi-matching functor at the empty vertex
    std::vector<CommaCategory> fibers;
    std::vector<HomologyResult> fiber_homology;
};
// x over P(n_+), including the empty subset
TotalFiberModel cube_total_fibers(const Diagram& x, Budget& budget);

struct CubeCartesianReport {
    bool reedy_ok = false;
    ReedyReport reedy;
    struct FiberRow {
        std::string phi;
        std::string homology;
        bool contractible = false;
    };
    std::vector<FiberRow> fibers;
    bool cartesian = false;
};
CubeCartesianReport cube_cartesian_check(const Diagram& x, Budget& budget);

// ---- Theorem B^n condition set ------------------------------------------------------

struct BnCondition {
    int k = 0;
    std::string subset_k;
    bool pass = true;
    std::vector<ProxyCheckRow> rows;
};
struct BnReport {
    int n = 0;
    long long expected_count = 0;  // 2^{n+1} - n - 2
    bool pass = true;
    std::vector<BnCondition> conditions;
};
// x over P_0(n_+)
BnReport theorem_bn_conditions(const Diagram& x, int n, Budget& budget);

}  // namespace catlim
