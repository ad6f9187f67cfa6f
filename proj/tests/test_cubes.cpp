#include <doctest.h>

#include "fixtures.hpp"

using namespace catlim;
using namespace catlim::testfix;

TEST_CASE("subset posets") {
    SubsetPoset p = subset_poset(ground_n_plus(2), false);
    CHECK(p.cat->num_objects() == 7);
    CHECK(validate_category(*p.cat).clean());
    CHECK(p.cat->object_index("{1,2,+}") >= 0);
    SubsetPoset q = subset_poset(ground_n_plus(1), true);
    CHECK(q.cat->num_objects() == 4);
    CHECK(q.cat->objects[0] == "{}");
}

TEST_CASE("the union-complement functor") {
    SUBCASE("n = 1 is an isomorphism") {
        LambdaFunctor lf = lambda_functor(1);
        CHECK(functor_is_isomorphism(lf.lambda));
    }
    SUBCASE("hand-evaluated values for n = 2") {
        LambdaFunctor lf = lambda_functor(2);
        CHECK(check_functor(lf.lambda).clean());
        auto value = [&](unsigned m1, unsigned m2) {
            std::vector<int> t = {lf.factors[0].object_of_mask(m1),
                                  lf.factors[1].object_of_mask(m2)};
            int o = lf.domain.object_tuple(t);
            return lf.target.cat->objects[lf.lambda.omap[o]];
        };
        CHECK(value(1u << 1, 1u << 2) == "{1,2}");      // ({1},{2})
        CHECK(value(1u, 1u) == "{+}");                  // ({+},{+})
        CHECK(value(1u | (1u << 1), 1u | (1u << 2)) == "{1,2,+}");
    }
}

TEST_CASE("cofinality of the comparison functor") {
    for (int n : {1, 2}) {
        LambdaCofinalityReport rep = lambda_cofinality(n);
        CHECK(rep.over.all_contractible);
        for (const auto& row : rep.over.rows) CHECK(row.contractible);
        for (const auto& c : rep.candidates) {
            CHECK(c.well_defined);
            CHECK(c.under_contractible);
        }
        // the quoted candidate object is initial except when the target subset
        // contains the basepoint and misses at least two plain elements
        for (const auto& c : rep.candidates) {
            int missing = 0;
            bool has_plus = c.subset.find('+') != std::string::npos;
            for (int i = 1; i <= n; ++i)
                if (c.subset.find(std::to_string(i)) == std::string::npos) ++missing;
            bool expect_initial = !has_plus || missing <= 1;
            CHECK(c.initial == expect_initial);
        }
        if (n == 1) CHECK(rep.all_initial);
        if (n == 2) CHECK(!rep.all_initial);  // fails exactly at {+}
    }
}

TEST_CASE("Theorem-style condition counts over punctured cubes") {
    Budget budget;
    for (int n : {1, 2, 3}) {
        Diagram x = constant_cube(n, true, point());
        BnReport rep = theorem_bn_conditions(x, n, budget);
        CHECK(static_cast<long long>(rep.conditions.size()) == rep.expected_count);
        CHECK(rep.expected_count == (1LL << (n + 1)) - n - 2);
        CHECK(rep.pass);
    }
    Diagram bad = constant_diagram(punctured_square(), point());
    CHECK_THROWS_AS(theorem_bn_conditions(bad, 2, budget), PreconditionError);
}

TEST_CASE("cube total fibers and the cartesian check") {
    Budget budget;
    auto i1 = interval();
    auto pt = point();

    SUBCASE("strict product square is cartesian") {
        SubsetPoset base = subset_poset(ground_n_plus(1), true);
        ProductCategory ab = product_category(i1, i1);
        Diagram d;
        d.base = base.cat;
        d.vertex.resize(4);
        int o_empty = base.object_of_mask(0), o_plus = base.object_of_mask(1);
        int o_one = base.object_of_mask(2), o_top = base.object_of_mask(3);
        d.vertex[o_empty] = ab.cat;
        d.vertex[o_plus] = i1;
        d.vertex[o_one] = i1;
        d.vertex[o_top] = pt;
        Functor proj1, proj2;
        proj1.src = proj2.src = ab.cat;
        proj1.tgt = proj2.tgt = i1;
        for (std::size_t o = 0; o < ab.cat->num_objects(); ++o) {
            auto [a, b] = ab.object_factors(static_cast<int>(o));
            proj1.omap.push_back(a);
            proj2.omap.push_back(b);
        }
        for (std::size_t m = 0; m < ab.cat->num_morphisms(); ++m) {
            auto [a, b] = ab.morphism_factors(static_cast<int>(m));
            proj1.mmap.push_back(a);
            proj2.mmap.push_back(b);
        }
        d.transition.resize(base.cat->num_morphisms());
        for (std::size_t m = 0; m < base.cat->num_morphisms(); ++m) {
            const Morphism& mor = base.cat->morphisms[m];
            if (mor.src == mor.tgt)
                d.transition[m] = identity_functor(d.vertex[mor.src]);
            else if (mor.src == o_empty && mor.tgt == o_one)
                d.transition[m] = proj1;
            else if (mor.src == o_empty && mor.tgt == o_plus)
                d.transition[m] = proj2;
            else
                d.transition[m] = const_functor(d.vertex[mor.src], pt, 0);
        }
        REQUIRE(check_diagram(d).clean());
        CubeCartesianReport rep = cube_cartesian_check(d, budget);
        CHECK(rep.reedy_ok);
        CHECK(rep.cartesian);
        for (const auto& f : rep.fibers) CHECK(f.contractible);

        SUBCASE("an empty corner is not cartesian") {
            Diagram bad = d;
            bad.vertex[o_empty] = empty_cat();
            for (std::size_t m = 0; m < base.cat->num_morphisms(); ++m) {
                const Morphism& mor = base.cat->morphisms[m];
                if (mor.src != o_empty) continue;
                Functor f;
                f.src = bad.vertex[o_empty];
                f.tgt = bad.vertex[mor.tgt];
                bad.transition[m] = f;
            }
            REQUIRE(check_diagram(bad).clean());
            CubeCartesianReport brep = cube_cartesian_check(bad, budget);
            CHECK(!brep.cartesian);
        }
    }

    SUBCASE("a 1-cube reduces to the comma model of a functor") {
        // base P(0_+) = {} -> {+}, a single map f : X_{} -> X_{+}
        SubsetPoset base = subset_poset(1u, true);
        REQUIRE(base.cat->num_objects() == 2);
        Diagram d;
        d.base = base.cat;
        d.vertex.resize(2);
        int o_empty = base.object_of_mask(0), o_plus = base.object_of_mask(1);
        d.vertex[o_empty] = i1;
        d.vertex[o_plus] = i1;
        d.transition.resize(base.cat->num_morphisms());
        for (std::size_t m = 0; m < base.cat->num_morphisms(); ++m)
            d.transition[m] = identity_functor(i1);
        TotalFiberModel tf = cube_total_fibers(d, budget);
        // the hom category over the single-object strict-under is a copy of X_{+},
        // and the fibers are the commas of the transition, up to reordering
        REQUIRE(tf.fibers.size() == i1->num_objects());
        std::multiset<std::pair<std::size_t, std::size_t>> got, want;
        for (std::size_t phi = 0; phi < tf.fibers.size(); ++phi) {
            got.insert({tf.fibers[phi].cat->num_objects(), tf.fibers[phi].cat->num_morphisms()});
            CommaCategory plain = comma_over(identity_functor(i1), static_cast<int>(phi));
            want.insert({plain.cat->num_objects(), plain.cat->num_morphisms()});
        }
        CHECK(got == want);
    }
}
