#include <algorithm>

#include "catlim/cubes.hpp"

namespace catlim {

std::string subset_name(unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i < 32; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    if (mask & 1u) {
        if (!first) s += ",";
        s += "+";
    }
    return s + "}";
}

unsigned ground_n_plus(int n) {
    unsigned g = 1;  // '+'
    for (int i = 1; i <= n; ++i) g |= (1u << i);
    return g;
}

unsigned ground_n(int n) {
    unsigned g = 0;
    for (int i = 1; i <= n; ++i) g |= (1u << i);
    return g;
}

int SubsetPoset::object_of_mask(unsigned m) const {
    for (std::size_t o = 0; o < mask_of_object.size(); ++o)
        if (mask_of_object[o] == m) return static_cast<int>(o);
    return -1;
}

SubsetPoset subset_poset_masks(const std::vector<unsigned>& masks) {
    SubsetPoset out;
    out.mask_of_object = masks;
    for (unsigned m : masks) out.ground |= m;
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (unsigned m : masks) elems.push_back(subset_name(m));
    for (unsigned a : masks)
        for (unsigned b : masks)
            if ((a & b) == a) pairs.emplace_back(subset_name(a), subset_name(b));
    out.cat = poset_category(elems, pairs);
    return out;
}

SubsetPoset subset_poset(unsigned ground, bool include_empty) {
    std::vector<unsigned> masks;
    for (unsigned m = 0; m <= ground; ++m)
        if ((m & ground) == m && (include_empty || m != 0)) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    SubsetPoset out = subset_poset_masks(masks);
    out.ground = ground;
    return out;
}

// ---- lambda ---------------------------------------------------------------------

LambdaFunctor lambda_functor(int n) {
    if (n < 1) throw PreconditionError("lambda_functor: n must be >= 1");
    LambdaFunctor out;
    out.n = n;
    std::vector<CatPtr> factor_cats;
    for (int i = 1; i <= n; ++i) {
        out.factors.push_back(subset_poset(1u | (1u << i), false));
        factor_cats.push_back(out.factors.back().cat);
    }
    out.domain = nary_product_category(factor_cats);
    out.target = subset_poset(ground_n_plus(n), false);
    const unsigned ground = ground_n_plus(n);

    out.lambda.src = out.domain.cat;
    out.lambda.tgt = out.target.cat;
    out.lambda.omap.resize(out.domain.cat->num_objects());
    out.tuple_of_object.resize(out.domain.cat->num_objects());
    for (std::size_t o = 0; o < out.domain.cat->num_objects(); ++o) {
        std::vector<int> t = out.domain.object_factors(static_cast<int>(o));
        std::vector<unsigned> masks(t.size());
        unsigned uni = 0;
        for (int i = 0; i < n; ++i) {
            masks[i] = out.factors[i].mask_of_object[t[i]];
            unsigned gi = 1u | (1u << (i + 1));
            uni |= (gi & ~masks[i]);  // {i}_+ \ V_i
        }
        out.tuple_of_object[o] = masks;
        unsigned value = ground & ~uni;
        int idx = out.target.object_of_mask(value);
        if (idx < 0) throw PreconditionError("lambda: image subset missing");
        out.lambda.omap[o] = idx;
    }
    out.lambda.mmap.resize(out.domain.cat->num_morphisms());
    for (std::size_t m = 0; m < out.domain.cat->num_morphisms(); ++m) {
        int so = out.domain.cat->morphisms[m].src;
        int to = out.domain.cat->morphisms[m].tgt;
        std::string id = out.target.cat->objects[out.lambda.omap[so]] + "<=" +
                         out.target.cat->objects[out.lambda.omap[to]];
        int idx = out.target.cat->morphism_index(id);
        if (idx < 0) throw PreconditionError("lambda: image morphism missing");
        out.lambda.mmap[m] = idx;
    }
    return out;
}

CofinalityReport cofinality_check(const Functor& f) {
    CofinalityReport rep;
    for (std::size_t b = 0; b < f.tgt->num_objects(); ++b) {
        CommaCategory over = comma_over(f, static_cast<int>(b));
        HomologyResult h = homology_of(*nerve(over.cat).ss);
        CofinalityRow row;
        row.object = f.tgt->objects[b];
        row.contractible = h.is_point();
        row.homology = h.brief();
        if (!row.contractible) rep.all_contractible = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

LambdaCofinalityReport lambda_cofinality(int n) {
    LambdaCofinalityReport rep;
    LambdaFunctor lf = lambda_functor(n);
    rep.over = cofinality_check(lf.lambda);

    // the union functor on proper subsets (empty allowed)
    std::vector<SubsetPoset> ufactors;
    std::vector<CatPtr> ufactor_cats;
    for (int i = 1; i <= n; ++i) {
        ufactors.push_back(subset_poset_masks({0u, 1u, 1u << i}));  // {}, {+}, {i}
        ufactor_cats.push_back(ufactors.back().cat);
    }
    NaryProductCategory udom = nary_product_category(ufactor_cats);
    std::vector<unsigned> proper;
    const unsigned ground = ground_n_plus(n);
    for (unsigned m = 0; m < ground; ++m)
        if ((m & ground) == m) proper.push_back(m);
    std::sort(proper.begin(), proper.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    SubsetPoset utgt = subset_poset_masks(proper);

    Functor uf;
    uf.src = udom.cat;
    uf.tgt = utgt.cat;
    uf.omap.resize(udom.cat->num_objects());
    std::vector<unsigned> union_of_object(udom.cat->num_objects());
    for (std::size_t o = 0; o < udom.cat->num_objects(); ++o) {
        std::vector<int> t = udom.object_factors(static_cast<int>(o));
        unsigned uni = 0;
        for (int i = 0; i < n; ++i) uni |= ufactors[i].mask_of_object[t[i]];
        union_of_object[o] = uni;
        int idx = utgt.object_of_mask(uni);
        if (idx < 0) throw PreconditionError("union functor: image missing");
        uf.omap[o] = idx;
    }
    uf.mmap.resize(udom.cat->num_morphisms());
    for (std::size_t m = 0; m < udom.cat->num_morphisms(); ++m) {
        int so = udom.cat->morphisms[m].src;
        int to = udom.cat->morphisms[m].tgt;
        int idx = utgt.cat->morphism_index(utgt.cat->objects[uf.omap[so]] + "<=" +
                                           utgt.cat->objects[uf.omap[to]]);
        uf.mmap[m] = idx;
    }

    for (std::size_t wo = 0; wo < utgt.mask_of_object.size(); ++wo) {
        unsigned w = utgt.mask_of_object[wo];
        LambdaCofinalityReport::CandidateRow row;
        row.subset = subset_name(w);
        // candidate components: {i} if i in W; {} if i,+ not in W; {+} if + in W, i not
        std::vector<int> tuple(n);
        for (int i = 1; i <= n; ++i) {
            unsigned mask;
            if (w & (1u << i))
                mask = 1u << i;
            else if (w & 1u)
                mask = 1u;
            else
                mask = 0u;
            tuple[i - 1] = ufactors[i - 1].object_of_mask(mask);
        }
        int cand_obj = udom.object_tuple(tuple);
        row.well_defined = (w & union_of_object[cand_obj]) == w;
        CommaCategory under = comma_under(uf, static_cast<int>(wo));
        HomologyResult h = homology_of(*nerve(under.cat).ss);
        row.under_contractible = h.is_point();
        if (row.well_defined) {
            int phi = utgt.cat->morphism_index(utgt.cat->objects[wo] + "<=" +
                                               utgt.cat->objects[uf.omap[cand_obj]]);
            int cidx = under.find_object(cand_obj, phi);
            row.initial = cidx >= 0 && is_initial(*under.cat, cidx);
        }
        if (!row.initial) rep.all_initial = false;
        rep.candidates.push_back(std::move(row));
    }
    return rep;
}

// ---- cubes -------------------------------------------------------------------------

Diagram constant_cube(int n, bool punctured, const CatPtr& value) {
    SubsetPoset p = subset_poset(ground_n_plus(n), !punctured);
    return constant_diagram(p.cat, value);
}

TotalFiberModel cube_total_fibers(const Diagram& x, Budget& budget) {
    int empty_idx = x.base->object_index("{}");
    if (empty_idx < 0)
        throw PreconditionError("cube_total_fibers: base has no empty-subset vertex");
    TotalFiberModel out;
    out.matching = matching_functor(x, empty_idx, budget);
    for (std::size_t phi = 0; phi < out.matching.hom.cat->num_objects(); ++phi) {
        out.fibers.push_back(comma_over(out.matching.fun, static_cast<int>(phi)));
        out.fiber_homology.push_back(homology_of(*nerve(out.fibers.back().cat).ss));
    }
    return out;
}

CubeCartesianReport cube_cartesian_check(const Diagram& x, Budget& budget) {
    CubeCartesianReport rep;
    rep.reedy = reedy_qf_check(x, budget);
    rep.reedy_ok = rep.reedy.pass;
    TotalFiberModel tf = cube_total_fibers(x, budget);
    rep.cartesian = true;
    for (std::size_t phi = 0; phi < tf.fibers.size(); ++phi) {
        CubeCartesianReport::FiberRow row;
        row.phi = tf.matching.hom.cat->objects[phi];
        row.homology = tf.fiber_homology[phi].brief();
        row.contractible = tf.fiber_homology[phi].is_point();
        if (!row.contractible) rep.cartesian = false;
        rep.fibers.push_back(std::move(row));
    }
    return rep;
}

// ---- Theorem B^n -----------------------------------------------------------------------

BnReport theorem_bn_conditions(const Diagram& x, int n, Budget& budget) {
    BnReport rep;
    rep.n = n;
    rep.expected_count = (1LL << (n + 1)) - n - 2;
    SubsetPoset shape = subset_poset(ground_n_plus(n), false);
    if (!x.base->same_data(*shape.cat))
        throw PreconditionError("theorem_bn_conditions: base is not the punctured subset poset");
    for (int k = 0; k <= n - 1; ++k) {
        unsigned rest = 0;
        for (int i = k + 1; i <= n; ++i) rest |= (1u << i);
        unsigned kplus = 1u;  // k_+ = {1..k, +}
        for (int i = 1; i <= k; ++i) kplus |= (1u << i);
        for (unsigned kk = 1; kk <= rest; ++kk) {
            if ((kk & rest) != kk || kk == 0) continue;
            // restrict to the nonempty subsets of K u k_+
            unsigned sub_ground = kk | kplus;
            std::vector<int> keep;
            for (std::size_t o = 0; o < shape.mask_of_object.size(); ++o)
                if ((shape.mask_of_object[o] & sub_ground) == shape.mask_of_object[o])
                    keep.push_back(static_cast<int>(o));
            Filtration sub = full_subcategory(x.base, keep);
            Diagram restricted = restrict_diagram(x, sub.inclusion);
            int anchor = sub.cat->object_index(subset_name(kk));
            if (anchor < 0) throw PreconditionError("theorem_bn_conditions: anchor subset missing");
            MatchingFunctor ck = matching_functor(restricted, anchor, budget);
            BnCondition cond;
            cond.k = k;
            cond.subset_k = subset_name(kk);
            cond.rows = matching_proxy_rows(
                ck, "k=" + std::to_string(k) + " K=" + cond.subset_k + " ", budget);
            cond.pass = true;
            for (const auto& row : cond.rows)
                if (!row.pass) cond.pass = false;
            if (!cond.pass) rep.pass = false;
            rep.conditions.push_back(std::move(cond));
        }
    }
    return rep;
}

}  // namespace catlim
