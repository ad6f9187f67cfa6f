// Regenerates the JSON fixtures under fixtures/. Run from the repo root:
//   ./build/tools/catlim-fixtures fixtures
// The outputs are committed; a test diffs them against fresh generator output.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "catlim/json_io.hpp"

using namespace catlim;

namespace {

CatPtr interval() {
    return poset_category({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "1"}});
}

CatPtr point(const std::string& name = "*") { return poset_category({name}, {{name, name}}); }

CatPtr empty_category() { return poset_category({}, {}); }

CatPtr punctured_square() {
    return poset_category({"{1}", "{2}", "{1,2}"},
                          {{"{1}", "{1,2}"}, {"{2}", "{1,2}"}});
}

Functor const_functor(const CatPtr& src, const CatPtr& tgt, int obj) {
    Functor f;
    f.src = src;
    f.tgt = tgt;
    f.omap.assign(src->num_objects(), obj);
    f.mmap.assign(src->num_morphisms(), tgt->identity[obj]);
    return f;
}

void write(const std::filesystem::path& dir, const std::string& name, const Json& j) {
    std::ofstream out(dir / name);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
    std::filesystem::create_directories(dir);

    CatPtr i1 = interval();
    CatPtr pt = point();
    CatPtr psq = punctured_square();

    write(dir, "punctured_square.cat.json", category_to_json(*psq));

    {
        // one composition entry retargeted to the wrong morphism
        Json broken = category_to_json(*psq);
        for (auto& triple : broken["compose"])
            if (triple[0] == "{1}<={1,2}" && triple[1] == "{1}<={1}")
                triple[2] = "{2}<={1,2}";
        write(dir, "broken_compose.cat.json", broken);
    }

    {
        Diagram d = constant_diagram(psq, i1);
        write(dir, "psq_const_interval.diagram.json", diagram_to_json(d));
        Json lemma;
        lemma["diagram"] = diagram_to_json(d);
        lemma["U"] = Json::array({"{1}", "{2}"});
        write(dir, "psq_lemma.lemma.json", lemma);
    }

    {
        CatPtr base = interval();  // reused shape: 0 -> 1
        Diagram y = constant_diagram(base, i1);
        Json j;
        j["Y"] = diagram_to_json(y);
        j["X"] = diagram_to_json(y);
        write(dir, "interval_pair.lydakis.json", j);
    }

    {
        Functor f = identity_functor(i1);
        Functor g = identity_functor(i1);
        Diagram cospan = cospan_diagram(f, g);
        OvercatDiagram over = overcat_diagram(cospan.base);
        Json j;
        j["Y"] = diagram_to_json(over.diagram);
        j["X"] = diagram_to_json(cospan);
        write(dir, "cospan_pair.lydakis.json", j);
    }

    {
        Functor f = const_functor(point("0"), i1, i1->object_index("0"));
        Functor g = const_functor(point("1"), i1, i1->object_index("1"));
        Json j;
        j["f"] = functor_to_json(f);
        j["g"] = functor_to_json(g);
        write(dir, "feet.cospan.json", j);
    }

    {
        // strict product square over P(1_+): corner A x B with projections
        SubsetPoset base = subset_poset(ground_n_plus(1), true);
        ProductCategory ab = product_category(i1, i1);
        Diagram d;
        d.base = base.cat;
        d.vertex.resize(base.cat->num_objects());
        int o_empty = base.object_of_mask(0);
        int o_plus = base.object_of_mask(1u);
        int o_one = base.object_of_mask(2u);
        int o_top = base.object_of_mask(3u);
        d.vertex[o_empty] = ab.cat;
        d.vertex[o_plus] = i1;
        d.vertex[o_one] = i1;
        d.vertex[o_top] = pt;
        Functor proj1, proj2;
        proj1.src = ab.cat;
        proj1.tgt = i1;
        proj2.src = ab.cat;
        proj2.tgt = i1;
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
        write(dir, "square_cube.diagram.json", diagram_to_json(d));

        Diagram bad = d;
        bad.vertex[o_empty] = empty_category();
        Functor none;
        none.src = bad.vertex[o_empty];
        for (std::size_t m = 0; m < base.cat->num_morphisms(); ++m) {
            const Morphism& mor = base.cat->morphisms[m];
            if (mor.src != o_empty) continue;
            Functor f;
            f.src = bad.vertex[o_empty];
            f.tgt = bad.vertex[mor.tgt];
            bad.transition[m] = f;
        }
        write(dir, "empty_corner_cube.diagram.json", diagram_to_json(bad));
    }

    {
        // C2 swapping the feet of the punctured square, constant diagram at [1]
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
        swap.omap = {psq->object_index("{2}"), psq->object_index("{1}"),
                     psq->object_index("{1,2}")};
        swap.mmap.resize(psq->num_morphisms());
        for (std::size_t m = 0; m < psq->num_morphisms(); ++m) {
            const Morphism& mor = psq->morphisms[m];
            std::string id =
                psq->objects[swap.omap[mor.src]] + "<=" + psq->objects[swap.omap[mor.tgt]];
            swap.mmap[m] = psq->morphism_index(id);
        }
        act.action.push_back(swap);
        GDiagram x = constant_g_diagram(act, i1);
        write(dir, "c2_swap.gdiagram.json", gdiagram_to_json(x));
    }

    {
        Diagram d = constant_cube(2, true, pt);
        write(dir, "bn2_const_point.diagram.json", diagram_to_json(d));
    }

    return 0;
}
