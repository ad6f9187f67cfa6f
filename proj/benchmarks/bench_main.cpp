#include <benchmark/benchmark.h>

#include "catlim/cubes.hpp"
#include "catlim/lydakis.hpp"

using namespace catlim;

namespace {

CatPtr interval() {
    return poset_category({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "1"}});
}

void bm_nerve_homology(benchmark::State& state) {
    SubsetPoset p = subset_poset(ground_n(static_cast<int>(state.range(0))), false);
    for (auto _ : state) {
        auto h = homology_of(*nerve(p.cat).ss);
        benchmark::DoNotOptimize(h.betti);
    }
}
BENCHMARK(bm_nerve_homology)->Arg(3)->Arg(4);

void bm_hom_category(benchmark::State& state) {
    SubsetPoset p = subset_poset(ground_n(3), false);
    Diagram x = constant_diagram(p.cat, interval());
    for (auto _ : state) {
        Budget budget;
        auto over = overcat_diagram(p.cat);
        auto h = hom_category(over.diagram, x, budget);
        benchmark::DoNotOptimize(h.objects.size());
    }
}
BENCHMARK(bm_hom_category);

void bm_smith_normal_form(benchmark::State& state) {
    // boundary matrix of the order complex of proper nonempty subsets of a 4-set
    SubsetPoset p = subset_poset(ground_n(4), false);
    std::vector<int> keep;
    for (std::size_t o = 0; o + 1 < p.cat->num_objects(); ++o) keep.push_back(static_cast<int>(o));
    Filtration sub = full_subcategory(p.cat, keep);
    ChainComplex c = normalized_chains(*nerve(sub.cat).ss);
    for (auto _ : state) {
        auto s = smith_normal_form(c.boundary[1]);
        benchmark::DoNotOptimize(s.d.a);
    }
}
BENCHMARK(bm_smith_normal_form);

void bm_lemma_iso(benchmark::State& state) {
    CatPtr psq = poset_category({"{1}", "{2}", "{1,2}"}, {{"{1}", "{1,2}"}, {"{2}", "{1,2}"}});
    Diagram x = constant_diagram(psq, interval());
    std::vector<int> u = {psq->object_index("{1}"), psq->object_index("{2}")};
    for (auto _ : state) {
        Budget budget;
        auto iso = lemma_indgrot_iso(x, u, budget);
        benchmark::DoNotOptimize(iso.roundtrip_identity);
    }
}
BENCHMARK(bm_lemma_iso);

}  // namespace

BENCHMARK_MAIN();
