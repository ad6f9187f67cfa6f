#pragma once

#include "catlim/cubes.hpp"
#include "catlim/equivariant.hpp"

namespace catlim::testfix {

inline CatPtr interval() {
    return poset_category({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "1"}});
}

inline CatPtr point(const std::string& name = "*") {
    return poset_category({name}, {{name, name}});
}

inline CatPtr empty_cat() { return poset_category({}, {}); }

// nonempty subsets of {1,2}
inline CatPtr punctured_square() {
    return poset_category({"{1}", "{2}", "{1,2}"}, {{"{1}", "{1,2}"}, {"{2}", "{1,2}"}});
}

// nonempty subsets of {1,2,3}
inline CatPtr punctured_cube() { return subset_poset(ground_n(3), false).cat; }

inline Functor const_functor(const CatPtr& src, const CatPtr& tgt, int obj) {
    Functor f;
    f.src = src;
    f.tgt = tgt;
    f.omap.assign(src->num_objects(), obj);
    f.mmap.assign(src->num_morphisms(), tgt->identity[obj]);
    return f;
}

// C2 = {e,g} swapping the feet of the punctured square
inline CategoryGAction c2_swap_action(const CatPtr& psq) {
    FinGroup c2;
    c2.elements = {"e", "g"};
    c2.mul = {{0, 1}, {1, 0}};
    c2.identity = 0;
    CategoryGAction act;
    act.group = c2;
    act.carrier = psq;
    act.action.push_back(identity_functor(psq));
    Functor swap;
    swap.src = psq;
    swap.tgt = psq;
    swap.omap = {psq->object_index("{2}"), psq->object_index("{1}"), psq->object_index("{1,2}")};
    swap.mmap.resize(psq->num_morphisms());
    for (std::size_t m = 0; m < psq->num_morphisms(); ++m) {
        const Morphism& mor = psq->morphisms[m];
        swap.mmap[m] = psq->morphism_index(psq->objects[swap.omap[mor.src]] + "<=" +
                                           psq->objects[swap.omap[mor.tgt]]);
    }
    act.action.push_back(swap);
    return act;
}

}  // namespace catlim::testfix
