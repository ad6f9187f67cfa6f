#include <doctest.h>

#include <set>

#include "fixtures.hpp"

using namespace catlim;
using namespace catlim::testfix;

namespace {
SimplicialMap nerve_product_comparison(const CatPtr& c, const CatPtr& d) {
    auto prod = product_category(c, d);
    NerveResult npc = nerve(prod.cat);
    NerveResult nc = nerve(c);
    NerveResult nd = nerve(d);
    ProductSS target = simplicial_product(nc.ss, nd.ss);
    Functor proj1, proj2;
    proj1.src = proj2.src = prod.cat;
    proj1.tgt = c;
    proj2.tgt = d;
    for (std::size_t o = 0; o < prod.cat->num_objects(); ++o) {
        auto [a, b] = prod.object_factors(static_cast<int>(o));
        proj1.omap.push_back(a);
        proj2.omap.push_back(b);
    }
    for (std::size_t m = 0; m < prod.cat->num_morphisms(); ++m) {
        auto [a, b] = prod.morphism_factors(static_cast<int>(m));
        proj1.mmap.push_back(a);
        proj2.mmap.push_back(b);
    }
    SimplicialMap f1 = nerve_map(proj1, npc, nc);
    SimplicialMap f2 = nerve_map(proj2, npc, nd);
    SimplicialMap cmp;
    cmp.source = npc.ss;
    cmp.target = target.ss;
    cmp.image.resize(npc.ss->dim() + 1);
    for (int n = 0; n <= npc.ss->dim(); ++n)
        for (int i = 0; i < npc.ss->count(n); ++i)
            cmp.image[n].push_back(target.normalize(f1.image[n][i], f2.image[n][i]));
    return cmp;
}
}  // namespace

TEST_CASE("nerves of small categories") {
    auto pt = point();
    NerveResult npt = nerve(pt);
    CHECK(npt.ss->f_vector() == std::vector<int>{1});
    CHECK(npt.ss->validate().clean());

    auto i1 = interval();
    NerveResult ni = nerve(i1);
    CHECK(ni.ss->f_vector() == std::vector<int>{2, 1});
    CHECK(ni.ss->validate().clean());

    auto pc = punctured_cube();
    NerveResult npc = nerve(pc);
    // oracle: chains of strict inclusions among nonempty subsets of {1,2,3}
    int len1 = 0, len2 = 0;
    for (unsigned a = 1; a < 8; ++a)
        for (unsigned b = 1; b < 8; ++b) {
            if (a == b || (a & b) != a) continue;
            ++len1;
            for (unsigned c = 1; c < 8; ++c)
                if (b != c && (b & c) == b) ++len2;
        }
    CHECK(npc.ss->f_vector() == std::vector<int>{7, len1, len2});
    CHECK(len1 == 12);
    CHECK(len2 == 6);
    CHECK(npc.ss->validate().clean());

    // total simplex counts: binomial expansion vs path counting
    for (int n = 0; n <= 4; ++n)
        CHECK(npc.ss->total_simplices(n) == nerve_total_simplices(*pc, n));
}

TEST_CASE("nerve rejects non-identity cycles") {
    CatBuilder b;
    b.add_object("x");
    int id = b.add_morphism("id", 0, 0);
    int e = b.add_morphism("e", 0, 0);
    b.set_identity(0, id);
    b.set_compose(id, id, id);
    b.set_compose(id, e, e);
    b.set_compose(e, id, e);
    b.set_compose(e, e, e);
    CHECK_THROWS_AS(nerve(b.freeze()), LoopyCategory);
}

TEST_CASE("nerve maps") {
    auto i1 = interval();
    NerveResult ni = nerve(i1);
    SimplicialMap ident = nerve_map(identity_functor(i1), ni, ni);
    CHECK(check_simplicial_map(ident).clean());
    CHECK(ident == identity_simplicial_map(ni.ss));

    auto psq = punctured_square();
    NerveResult npsq = nerve(psq);
    SimplicialMap collapse = nerve_map(const_functor(psq, i1, 0), npsq, ni);
    CHECK(check_simplicial_map(collapse).clean());
    for (int i = 0; i < npsq.ss->count(1); ++i) CHECK(!collapse.image[1][i].nondegenerate());

    auto f0 = filtration(psq, 0);
    NerveResult nsub = nerve(f0.cat);
    SimplicialMap incl = nerve_map(f0.inclusion, nsub, npsq);
    CHECK(check_simplicial_map(incl).clean());
    std::set<int> hit;
    for (int i = 0; i < nsub.ss->count(0); ++i) hit.insert(incl.image[0][i].ref.idx);
    CHECK(hit.size() == static_cast<std::size_t>(nsub.ss->count(0)));
}

TEST_CASE("simplicial products") {
    auto d1 = standard_simplex(1);
    ProductSS sq = simplicial_product(d1, d1);
    CHECK(sq.ss->f_vector() == std::vector<int>{4, 5, 2});
    CHECK(sq.ss->validate().clean());

    auto ptn = standard_simplex(0);
    ProductSS with_pt = simplicial_product(d1, ptn);
    CHECK(with_pt.ss->f_vector() == d1->f_vector());

    SimplicialMap cmp = nerve_product_comparison(interval(), interval());
    CHECK(is_simplicial_iso(cmp));
    SimplicialMap cmp2 = nerve_product_comparison(punctured_square(), interval());
    CHECK(is_simplicial_iso(cmp2));
}

TEST_CASE("smith normal form") {
    IntMat m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult s = smith_normal_form(m);
    auto diag = s.diagonal();
    REQUIRE(diag.size() == 2);
    CHECK(diag[0] == 2);
    CHECK(diag[1] == 4);
    CHECK(mat_equal(mat_mul(mat_mul(s.u, m), s.v), s.d));
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(abs(determinant(m)) == 8);

    // divisibility chain on a fixed 3x3 example
    IntMat t(3, 3);
    int vals[9] = {2, 4, 4, -6, 6, 12, 10, 4, 16};
    for (int i = 0; i < 9; ++i) t.a[i] = vals[i];
    SmithResult st = smith_normal_form(t);
    auto dt = st.diagonal();
    for (std::size_t i = 1; i < dt.size(); ++i) CHECK(dt[i] % dt[i - 1] == 0);
    CHECK(mat_equal(mat_mul(mat_mul(st.u, t), st.v), st.d));
}

TEST_CASE("homology of small complexes") {
    auto pt = point();
    HomologyResult hp = homology_of(*nerve(pt).ss);
    CHECK(hp.is_point());

    // proper nonempty subsets of a 3-set: a circle
    auto pc = punctured_cube();
    std::vector<int> keep;
    for (std::size_t o = 0; o < pc->num_objects(); ++o)
        if (pc->objects[o] != "{1,2,3}") keep.push_back(static_cast<int>(o));
    auto circle_cat = full_subcategory(pc, keep);
    NerveResult circ = nerve(circle_cat.cat);
    ChainComplex cx = normalized_chains(*circ.ss);
    CHECK(cx.validate().clean());
    HomologyResult h = homology(cx);
    REQUIRE(h.betti.size() == 2);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == 1);
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[1].empty());
    CHECK(rational_betti(cx) == h.betti);

    // Euler characteristic consistency
    for (const CatPtr& c : {pt, interval(), punctured_square(), circle_cat.cat, pc}) {
        NerveResult n = nerve(c);
        HomologyResult hh = homology_of(*n.ss);
        long long chi = 0;
        for (std::size_t d = 0; d < hh.betti.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * hh.betti[d];
        CHECK(chi == n.ss->euler_characteristic());
        CHECK(normalized_chains(*n.ss).validate().clean());
    }

    // categories with an initial or terminal object have point homology
    auto psq = punctured_square();
    for (std::size_t o = 0; o < psq->num_objects(); ++o) {
        CHECK(homology_of(*nerve(under_category(psq, static_cast<int>(o)).cat).ss).is_point());
        CHECK(homology_of(*nerve(over_category(psq, static_cast<int>(o)).cat).ss).is_point());
    }
}

TEST_CASE("induced maps and the homology-equivalence proxy") {
    auto psq = punctured_square();
    NerveResult npsq = nerve(psq);
    CHECK(is_homology_equivalence(identity_simplicial_map(npsq.ss)));

    auto pt = point();
    NerveResult npt = nerve(pt);
    SimplicialMap collapse = nerve_map(const_functor(psq, pt, 0), npsq, npt);
    CHECK(is_homology_equivalence(collapse));

    // one foot into the punctured square: both contractible
    std::vector<int> foot = {psq->object_index("{1}")};
    auto sub = full_subcategory(psq, foot);
    NerveResult nfoot = nerve(sub.cat);
    SimplicialMap incl = nerve_map(sub.inclusion, nfoot, npsq);
    CHECK(is_homology_equivalence(incl));
    InducedMapResult im = induced_homology_map(incl);
    CHECK(im.pi0_bijective);
    for (bool ok : im.iso_in_degree) CHECK(ok);

    // a non-equivalence: a vertex into the circle
    auto pc = punctured_cube();
    std::vector<int> keep;
    for (std::size_t o = 0; o < pc->num_objects(); ++o)
        if (pc->objects[o] != "{1,2,3}") keep.push_back(static_cast<int>(o));
    auto circle_cat = full_subcategory(pc, keep);
    NerveResult circ = nerve(circle_cat.cat);
    auto one = full_subcategory(circle_cat.cat, {0});
    NerveResult none = nerve(one.cat);
    SimplicialMap vert = nerve_map(one.inclusion, none, circ);
    CHECK(!is_homology_equivalence(vert));

    // proxy is invariant under composing with an isomorphism on the source
    SimplicialMap cmp = nerve_product_comparison(interval(), interval());
    REQUIRE(is_simplicial_iso(cmp));
    auto prod_cat = product_category(interval(), interval());
    NerveResult nprod = nerve(prod_cat.cat);
    ProductSS prod_ss = simplicial_product(nerve(interval()).ss, nerve(interval()).ss);
    SimplicialMap to_pt_a = nerve_map(const_functor(prod_cat.cat, pt, 0), nprod, npt);
    CHECK(is_homology_equivalence(to_pt_a));
}

TEST_CASE("enumerating simplicial maps") {
    Budget budget;
    auto d1 = standard_simplex(1);
    auto d0 = standard_simplex(0);
    auto psq = punctured_square();
    NerveResult npsq = nerve(psq);

    auto from_point = enumerate_simplicial_maps(d0, npsq.ss, budget);
    CHECK(from_point.size() == static_cast<std::size_t>(npsq.ss->count(0)));

    auto endo = enumerate_simplicial_maps(d1, d1, budget);
    CHECK(endo.size() == 3);
    for (const auto& f : endo) CHECK(check_simplicial_map(f).clean());

    auto i1 = interval();
    NerveResult ni = nerve(i1);
    auto maps = enumerate_simplicial_maps(npsq.ss, ni.ss, budget);
    auto functors = all_functors(psq, i1, budget);
    CHECK(maps.size() == functors.size());
    // each functor's nerve appears among the enumerated maps
    std::set<std::string> keys;
    for (const auto& f : maps) keys.insert(f.key());
    for (const auto& f : functors) CHECK(keys.count(nerve_map(f, npsq, ni).key()) == 1);
}

TEST_CASE("budget aborts oversized searches") {
    Budget tiny;
    tiny.limit = 3;
    auto psq = punctured_square();
    NerveResult npsq = nerve(psq);
    CHECK_THROWS_AS(enumerate_simplicial_maps(npsq.ss, npsq.ss, tiny), BudgetExceeded);
}
