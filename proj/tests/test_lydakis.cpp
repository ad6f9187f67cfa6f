#include <doctest.h>

#include "catlim/lydakis.hpp"
#include "fixtures.hpp"

using namespace catlim;
using namespace catlim::testfix;

TEST_CASE("nerve of the hom category vs the simplicial mapping space") {
    Budget budget;
    SUBCASE("constant point diagrams") {
        auto base = interval();
        Diagram y = constant_diagram(base, point());
        LydakisReport rep = lydakis_check(y, y, 2, budget);
        CHECK(rep.pass);
        for (const auto& row : rep.rows) {
            CHECK(row.nerve_count == 1);
            CHECK(row.mapping_count == 1);
        }
    }
    SUBCASE("constant interval diagrams over the interval") {
        auto base = interval();
        Diagram y = constant_diagram(base, interval());
        LydakisReport rep = lydakis_check(y, y, 2, budget);
        CHECK(rep.pass);
        for (const auto& row : rep.rows) {
            CHECK(row.nerve_count == row.mapping_count);
            CHECK(row.bijection);
            CHECK(row.faces);
        }
    }
    SUBCASE("the cospan base with poset vertices") {
        Functor f = identity_functor(interval());
        Diagram x = cospan_diagram(f, f);
        OvercatDiagram over = overcat_diagram(x.base);
        LydakisReport rep = lydakis_check(over.diagram, x, 2, budget);
        CHECK(rep.pass);
        for (const auto& row : rep.rows) {
            CHECK(row.nerve_count == row.mapping_count);
            CHECK(row.bijection);
            CHECK(row.faces);
        }
    }
}
