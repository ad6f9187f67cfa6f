#include <doctest.h>

#include <functional>
#include <set>

#include "fixtures.hpp"

using namespace catlim;
using namespace catlim::testfix;

namespace {

// independent longest-chain oracle (no memoization, plain DFS)
int longest_chain_from(const FinCategory& c, int obj) {
    int best = 0;
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        if (c.is_identity(static_cast<int>(m)) || c.morphisms[m].src != obj) continue;
        best = std::max(best, 1 + longest_chain_from(c, c.morphisms[m].tgt));
    }
    return best;
}

}  // namespace

TEST_CASE("posets are categories") {
    auto i1 = interval();
    CHECK(i1->num_objects() == 2);
    CHECK(i1->num_morphisms() == 3);
    CHECK(validate_category(*i1).clean());

    auto psq = punctured_square();
    CHECK(psq->num_objects() == 3);
    CHECK(psq->num_morphisms() == 5);
    CHECK(validate_category(*psq).clean());
}

TEST_CASE("punctured cube table sizes by subset-pair enumeration") {
    auto pc = punctured_cube();
    // oracle: count pairs S <= T of nonempty subsets of {1,2,3}
    int pairs = 0, subsets = 0;
    for (unsigned s = 1; s < 8; ++s) {
        ++subsets;
        for (unsigned t = 1; t < 8; ++t)
            if ((s & t) == s) ++pairs;
    }
    CHECK(subsets == 7);
    CHECK(pairs == 19);
    CHECK(static_cast<int>(pc->num_objects()) == subsets);
    CHECK(static_cast<int>(pc->num_morphisms()) == pairs);
    CHECK(validate_category(*pc).clean());
}

TEST_CASE("a retargeted composition entry is reported as a typing violation") {
    CatBuilder b;
    b.add_object("x");
    b.add_object("y");
    int idx = b.add_morphism("idx", 0, 0);
    int idy = b.add_morphism("idy", 1, 1);
    int f = b.add_morphism("f", 0, 1);
    b.set_identity(0, idx);
    b.set_identity(1, idy);
    b.set_compose(idx, idx, idx);
    b.set_compose(idy, idy, idy);
    b.set_compose(f, idx, f);
    b.set_compose(idy, f, idx);  // wrong endpoints
    auto c = b.freeze();
    auto rep = validate_category(*c);
    int typing = 0;
    for (const auto& v : rep.violations)
        if (v.code == "typing") ++typing;
    CHECK(typing == 1);
}

TEST_CASE("poset_category rejects bad order data") {
    CHECK_THROWS_AS(poset_category({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
                    PreconditionError);  // not transitively closed
    CHECK_THROWS_AS(poset_category({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PreconditionError);
}

TEST_CASE("products: unit and sizes") {
    auto i1 = interval();
    auto pt = point();
    auto prod = product_category(i1, pt);
    REQUIRE(prod.cat->num_objects() == i1->num_objects());
    REQUIRE(prod.cat->num_morphisms() == i1->num_morphisms());
    // canonical iso C x 1 -> C
    Functor iso;
    iso.src = prod.cat;
    iso.tgt = i1;
    for (std::size_t o = 0; o < prod.cat->num_objects(); ++o)
        iso.omap.push_back(prod.object_factors(static_cast<int>(o)).first);
    for (std::size_t m = 0; m < prod.cat->num_morphisms(); ++m)
        iso.mmap.push_back(prod.morphism_factors(static_cast<int>(m)).first);
    CHECK(functor_is_isomorphism(iso));

    auto sq = product_category(i1, i1);
    CHECK(sq.cat->num_objects() == 4);
    CHECK(sq.cat->num_morphisms() == 9);
    CHECK(validate_category(*sq.cat).clean());

    auto p1 = subset_poset(1u | (1u << 1), false);
    auto p2 = subset_poset(1u | (1u << 2), false);
    auto pp = product_category(p1.cat, p2.cat);
    CHECK(pp.cat->num_objects() == 9);
}

TEST_CASE("product associativity up to canonical isomorphism") {
    auto i1 = interval();
    auto psq = punctured_square();
    auto ab = product_category(i1, psq);
    auto ab_c = product_category(ab.cat, i1);
    auto bc = product_category(psq, i1);
    auto a_bc = product_category(i1, bc.cat);
    Functor iso;
    iso.src = ab_c.cat;
    iso.tgt = a_bc.cat;
    for (std::size_t o = 0; o < ab_c.cat->num_objects(); ++o) {
        auto [ab_o, c_o] = ab_c.object_factors(static_cast<int>(o));
        auto [a_o, b_o] = ab.object_factors(ab_o);
        iso.omap.push_back(a_bc.object_pair(a_o, bc.object_pair(b_o, c_o)));
    }
    for (std::size_t m = 0; m < ab_c.cat->num_morphisms(); ++m) {
        auto [ab_m, c_m] = ab_c.morphism_factors(static_cast<int>(m));
        auto [a_m, b_m] = ab.morphism_factors(ab_m);
        iso.mmap.push_back(a_bc.morphism_pair(a_m, bc.morphism_pair(b_m, c_m)));
    }
    CHECK(functor_is_isomorphism(iso));
}

TEST_CASE("over and under categories") {
    auto i1 = interval();
    auto over = over_category(i1, i1->object_index("1"));
    CHECK(over.cat->num_objects() == 2);
    CHECK(check_functor(over.projection).clean());
    auto term = find_terminal(*over.cat);
    REQUIRE(term.has_value());
    CHECK(over.cat->objects[*term] == "1<=1");

    auto psq = punctured_square();
    auto su = strict_under(psq, psq->object_index("{1}"));
    CHECK(su.cat->num_objects() == 1);
    CHECK(su.cat->num_morphisms() == 1);
    CHECK(su.cat->is_identity(0));

    for (const CatPtr& c : {i1, psq, punctured_cube()})
        for (std::size_t o = 0; o < c->num_objects(); ++o) {
            auto under = under_category(c, static_cast<int>(o));
            auto ini = find_initial(*under.cat);
            REQUIRE(ini.has_value());
            CHECK(under.cat->objects[*ini] == c->morphisms[c->identity[o]].id);
            auto ov = over_category(c, static_cast<int>(o));
            auto ter = find_terminal(*ov.cat);
            REQUIRE(ter.has_value());
            CHECK(ov.cat->objects[*ter] == c->morphisms[c->identity[o]].id);
        }
}

TEST_CASE("union of under categories") {
    auto psq = punctured_square();
    int o1 = psq->object_index("{1}");
    auto single = union_under(psq, {o1});
    auto under = under_category(psq, o1);
    CHECK(single.le.cat->same_data(*under.cat));

    auto pc = punctured_cube();
    std::vector<int> singletons = {pc->object_index("{1}"), pc->object_index("{2}"),
                                   pc->object_index("{3}")};
    auto uu = union_under(pc, singletons);
    // oracle: morphisms out of each singleton = inclusions into supersets
    int le_count = 0, lt_count = 0;
    for (unsigned s : {1u << 1, 1u << 2, 1u << 3})
        for (unsigned t = 1; t < 16; ++t) {
            if ((t & ground_n(3)) != t) continue;
            if ((s & t) != s) continue;
            ++le_count;
            if (t != s) ++lt_count;
        }
    CHECK(static_cast<int>(uu.le.cat->num_objects()) == le_count);
    CHECK(static_cast<int>(uu.lt.cat->num_objects()) == lt_count);
    CHECK(le_count == 12);
    CHECK(lt_count == 9);
    CHECK(validate_category(*uu.le.cat).clean());
    CHECK(validate_category(*uu.lt.cat).clean());
    CHECK(check_functor(uu.inclusion).clean());

    int otop = pc->object_index("{1,2,3}");
    CHECK_THROWS_AS(union_under(pc, {o1, otop}), PreconditionError);
}

TEST_CASE("degree function against the longest-chain oracle") {
    auto psq = punctured_square();
    auto deg = degree_function(*psq);
    for (std::size_t o = 0; o < psq->num_objects(); ++o)
        CHECK(deg[o] == longest_chain_from(*psq, static_cast<int>(o)));
    CHECK(deg[psq->object_index("{1}")] == 1);
    CHECK(deg[psq->object_index("{2}")] == 1);
    CHECK(deg[psq->object_index("{1,2}")] == 0);

    auto pc = punctured_cube();
    auto dc = degree_function(*pc);
    for (std::size_t o = 0; o < pc->num_objects(); ++o)
        CHECK(dc[o] == longest_chain_from(*pc, static_cast<int>(o)));

    // degree is strictly decreasing along non-identity morphisms
    for (const CatPtr& c : {psq, pc}) {
        auto d = degree_function(*c);
        for (std::size_t m = 0; m < c->num_morphisms(); ++m)
            if (!c->is_identity(static_cast<int>(m)))
                CHECK(d[c->morphisms[m].src] > d[c->morphisms[m].tgt]);
    }
}

TEST_CASE("non-identity endomorphism is rejected as not left-finite") {
    CatBuilder b;
    b.add_object("x");
    int id = b.add_morphism("id", 0, 0);
    int e = b.add_morphism("e", 0, 0);
    b.set_identity(0, id);
    b.set_compose(id, id, id);
    b.set_compose(id, e, e);
    b.set_compose(e, id, e);
    b.set_compose(e, e, e);
    auto c = b.freeze();
    CHECK(validate_category(*c).clean());
    CHECK_THROWS_AS(degree_function(*c), NotLeftFinite);
}

TEST_CASE("filtration layers") {
    auto psq = punctured_square();
    auto f0 = filtration(psq, 0);
    CHECK(f0.cat->num_objects() == 1);
    CHECK(f0.cat->objects[0] == "{1,2}");
    auto deg = degree_function(*psq);
    int top = *std::max_element(deg.begin(), deg.end());
    auto fall = filtration(psq, top);
    CHECK(fall.cat->same_data(*psq));

    auto pc = punctured_cube();
    auto layer1 = degree_layer(*pc, 1);
    std::set<std::string> names;
    for (int o : layer1) names.insert(pc->objects[o]);
    CHECK(names == std::set<std::string>{"{1,2}", "{1,3}", "{2,3}"});
    // within a layer there is no non-identity morphism
    for (int a : layer1)
        for (int b : layer1)
            for (std::size_t m = 0; m < pc->num_morphisms(); ++m)
                if (pc->morphisms[m].src == a && pc->morphisms[m].tgt == b)
                    CHECK(pc->is_identity(static_cast<int>(m)));

    // the projection of I_n <= I covers exactly the objects of I_{<= n}
    for (int n = 0; n <= 2; ++n) {
        auto layer = degree_layer(*pc, n);
        if (layer.empty()) continue;
        auto uu = union_under(pc, layer);
        std::set<int> image;
        for (std::size_t o = 0; o < uu.le.cat->num_objects(); ++o)
            image.insert(uu.le.projection.omap[o]);
        auto fl = filtration(pc, n);
        std::set<int> want(fl.object_of_ambient.begin(), fl.object_of_ambient.end());
        CHECK(image == want);
    }
}

TEST_CASE("comma categories") {
    auto i1 = interval();
    SUBCASE("comma over the identity agrees with the over category") {
        int b = i1->object_index("1");
        auto comma = comma_over(identity_functor(i1), b);
        auto over = over_category(i1, b);
        REQUIRE(comma.cat->num_objects() == over.cat->num_objects());
        Functor iso;
        iso.src = comma.cat;
        iso.tgt = over.cat;
        for (std::size_t o = 0; o < comma.cat->num_objects(); ++o)
            iso.omap.push_back(over.cat->object_index(i1->morphisms[comma.object_phi[o]].id));
        for (std::size_t m = 0; m < comma.cat->num_morphisms(); ++m) {
            int so = comma.cat->morphisms[m].src, to = comma.cat->morphisms[m].tgt;
            int u = comma.projection.mmap[m];
            std::string id = "(" + i1->morphisms[comma.object_phi[so]].id + ">" +
                             i1->morphisms[u].id + ">" + i1->morphisms[comma.object_phi[to]].id +
                             ")";
            iso.mmap.push_back(over.cat->morphism_index(id));
        }
        CHECK(functor_is_isomorphism(iso));
    }
    SUBCASE("comma of a point inclusion") {
        auto pt = point("0");
        Functor f = const_functor(pt, i1, i1->object_index("0"));
        auto comma = comma_over(f, i1->object_index("1"));
        CHECK(comma.cat->num_objects() == 1);
        CHECK(comma.cat->num_morphisms() == 1);
        auto comma0 = comma_over(const_functor(pt, i1, i1->object_index("1")),
                                 i1->object_index("0"));
        CHECK(comma0.cat->num_objects() == 0);
    }
}

TEST_CASE("functor and naturality validators") {
    auto i1 = interval();
    CHECK(check_functor(identity_functor(i1)).clean());
    CHECK(check_functor(const_functor(punctured_square(), i1, 0)).clean());

    // parallel pair p, q : a -> b picks up exactly one naturality violation
    CatBuilder b;
    b.add_object("a");
    b.add_object("b");
    int ida = b.add_morphism("ida", 0, 0);
    int idb = b.add_morphism("idb", 1, 1);
    int p = b.add_morphism("p", 0, 1);
    int q = b.add_morphism("q", 0, 1);
    b.set_identity(0, ida);
    b.set_identity(1, idb);
    b.set_compose(ida, ida, ida);
    b.set_compose(idb, idb, idb);
    b.set_compose(p, ida, p);
    b.set_compose(idb, p, p);
    b.set_compose(q, ida, q);
    b.set_compose(idb, q, q);
    auto d = b.freeze();
    CHECK(validate_category(*d).clean());

    // interval morphisms are indexed (id_0, 0<=1, id_1)
    Functor fp, fq;
    fp.src = fq.src = i1;
    fp.tgt = fq.tgt = d;
    fp.omap = fq.omap = {0, 1};
    fp.mmap = {ida, p, idb};
    fq.mmap = {ida, q, idb};
    CHECK(check_functor(fp).clean());
    CHECK(check_functor(fq).clean());
    NatTrans eta;
    eta.source = fp;
    eta.target = fq;
    eta.component = {ida, idb};
    auto rep = check_nat_trans(eta);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].code == "naturality");
}

TEST_CASE("functor enumeration on small shapes") {
    Budget budget;
    auto i1 = interval();
    auto fs = all_functors(i1, i1, budget);
    CHECK(fs.size() == 3);  // 00, 01, 11
    auto psq = punctured_square();
    auto gs = all_functors(psq, i1, budget);
    CHECK(gs.size() == 5);  // z=1: 4 choices of feet; z=0: 1
    for (const auto& f : gs) CHECK(check_functor(f).clean());
}
