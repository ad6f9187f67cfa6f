#include "catlim/json_io.hpp"

namespace catlim {

const char* kProxyNote =
    "weak equivalences are verified by a homology proxy (pi0 bijection + integral homology "
    "isomorphism); this is a necessary condition, not a proof of weak equivalence";

namespace {
std::string verdict(bool pass) {
    return pass ? "pass (homology proxy)" : "FAIL (homology proxy)";
}

Json proxy_row_to_json(const ProxyCheckRow& row) {
    Json j;
    j["condition"] = row.condition;
    j["objects"] = row.objects;
    j["verdict"] = verdict(row.pass);
    j["evidence"] = {{"source_homology", row.source_homology},
                     {"target_homology", row.target_homology}};
    return j;
}
}  // namespace

Json category_to_json(const FinCategory& c) {
    Json j;
    j["objects"] = c.objects;
    Json mors = Json::array();
    for (const auto& m : c.morphisms)
        mors.push_back({{"id", m.id}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
    j["morphisms"] = mors;
    Json ident = Json::object();
    for (std::size_t o = 0; o < c.num_objects(); ++o)
        ident[c.objects[o]] = c.morphisms[c.identity[o]].id;
    j["identity"] = ident;
    Json comp = Json::array();
    for (std::size_t g = 0; g < c.num_morphisms(); ++g)
        for (std::size_t f = 0; f < c.num_morphisms(); ++f) {
            auto gf = c.try_compose(static_cast<int>(g), static_cast<int>(f));
            if (gf)
                comp.push_back(
                    Json::array({c.morphisms[g].id, c.morphisms[f].id, c.morphisms[*gf].id}));
        }
    j["compose"] = comp;
    return j;
}

CatPtr category_from_json(const Json& j) {
    CatBuilder b;
    if (!j.contains("objects") || !j.contains("morphisms"))
        throw PreconditionError("category json: missing objects/morphisms");
    for (const auto& o : j.at("objects")) b.add_object(o.get<std::string>());
    for (const auto& m : j.at("morphisms")) {
        int src = b.cat.object_index(m.at("src").get<std::string>());
        int tgt = b.cat.object_index(m.at("tgt").get<std::string>());
        if (src < 0 || tgt < 0)
            throw PreconditionError("category json: morphism endpoint unknown: " +
                                    m.at("id").get<std::string>());
        b.add_morphism(m.at("id").get<std::string>(), src, tgt);
    }
    for (auto it = j.at("identity").begin(); it != j.at("identity").end(); ++it) {
        int obj = b.cat.object_index(it.key());
        int mor = b.cat.morphism_index(it.value().get<std::string>());
        if (obj < 0 || mor < 0) throw PreconditionError("category json: bad identity entry");
        b.set_identity(obj, mor);
    }
    for (const auto& t : j.at("compose")) {
        int g = b.cat.morphism_index(t.at(0).get<std::string>());
        int f = b.cat.morphism_index(t.at(1).get<std::string>());
        int gf = b.cat.morphism_index(t.at(2).get<std::string>());
        if (g < 0 || f < 0 || gf < 0) throw PreconditionError("category json: bad compose entry");
        b.set_compose(g, f, gf);
    }
    return b.freeze();
}

Json functor_maps_to_json(const Functor& f) {
    Json j;
    Json omap = Json::object(), mmap = Json::object();
    for (std::size_t o = 0; o < f.omap.size(); ++o)
        omap[f.src->objects[o]] = f.tgt->objects[f.omap[o]];
    for (std::size_t m = 0; m < f.mmap.size(); ++m)
        mmap[f.src->morphisms[m].id] = f.tgt->morphisms[f.mmap[m]].id;
    j["object_map"] = omap;
    j["morphism_map"] = mmap;
    return j;
}

Functor functor_from_maps(const Json& j, const CatPtr& src, const CatPtr& tgt) {
    Functor f;
    f.src = src;
    f.tgt = tgt;
    f.omap.assign(src->num_objects(), -1);
    f.mmap.assign(src->num_morphisms(), -1);
    for (auto it = j.at("object_map").begin(); it != j.at("object_map").end(); ++it) {
        int a = src->object_index(it.key());
        int b = tgt->object_index(it.value().get<std::string>());
        if (a < 0 || b < 0) throw PreconditionError("functor json: unknown object " + it.key());
        f.omap[a] = b;
    }
    for (auto it = j.at("morphism_map").begin(); it != j.at("morphism_map").end(); ++it) {
        int a = src->morphism_index(it.key());
        int b = tgt->morphism_index(it.value().get<std::string>());
        if (a < 0 || b < 0) throw PreconditionError("functor json: unknown morphism " + it.key());
        f.mmap[a] = b;
    }
    for (int v : f.omap)
        if (v < 0) throw PreconditionError("functor json: object map not total");
    for (int v : f.mmap)
        if (v < 0) throw PreconditionError("functor json: morphism map not total");
    return f;
}

Json functor_to_json(const Functor& f) {
    Json j;
    j["source"] = category_to_json(*f.src);
    j["target"] = category_to_json(*f.tgt);
    Json maps = functor_maps_to_json(f);
    j["object_map"] = maps["object_map"];
    j["morphism_map"] = maps["morphism_map"];
    return j;
}

Functor functor_from_json(const Json& j) {
    CatPtr src = category_from_json(j.at("source"));
    CatPtr tgt = category_from_json(j.at("target"));
    return functor_from_maps(j, src, tgt);
}

Json diagram_to_json(const Diagram& d) {
    Json j;
    j["base"] = category_to_json(*d.base);
    Json vertex = Json::object();
    for (std::size_t o = 0; o < d.base->num_objects(); ++o)
        vertex[d.base->objects[o]] = category_to_json(*d.vertex[o]);
    j["vertex"] = vertex;
    Json transition = Json::object();
    for (std::size_t m = 0; m < d.base->num_morphisms(); ++m)
        transition[d.base->morphisms[m].id] = functor_maps_to_json(d.transition[m]);
    j["transition"] = transition;
    return j;
}

Diagram diagram_from_json(const Json& j) {
    Diagram d;
    d.base = category_from_json(j.at("base"));
    d.vertex.resize(d.base->num_objects());
    for (std::size_t o = 0; o < d.base->num_objects(); ++o) {
        const std::string& id = d.base->objects[o];
        if (!j.at("vertex").contains(id))
            throw PreconditionError("diagram json: missing vertex at " + id);
        d.vertex[o] = category_from_json(j.at("vertex").at(id));
    }
    d.transition.resize(d.base->num_morphisms());
    for (std::size_t m = 0; m < d.base->num_morphisms(); ++m) {
        const std::string& id = d.base->morphisms[m].id;
        if (!j.at("transition").contains(id))
            throw PreconditionError("diagram json: missing transition at " + id);
        d.transition[m] = functor_from_maps(j.at("transition").at(id),
                                            d.vertex[d.base->morphisms[m].src],
                                            d.vertex[d.base->morphisms[m].tgt]);
    }
    return d;
}

Json group_to_json(const FinGroup& g) {
    Json j;
    j["elements"] = g.elements;
    Json mul = Json::array();
    for (std::size_t a = 0; a < g.elements.size(); ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < g.elements.size(); ++b) row.push_back(g.elements[g.mul[a][b]]);
        mul.push_back(row);
    }
    j["mul"] = mul;
    j["identity"] = g.elements[g.identity];
    return j;
}

FinGroup group_from_json(const Json& j) {
    FinGroup g;
    for (const auto& e : j.at("elements")) g.elements.push_back(e.get<std::string>());
    auto index = [&](const std::string& id) {
        for (std::size_t i = 0; i < g.elements.size(); ++i)
            if (g.elements[i] == id) return static_cast<int>(i);
        throw PreconditionError("group json: unknown element " + id);
    };
    for (const auto& row : j.at("mul")) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(index(e.get<std::string>()));
        g.mul.push_back(std::move(r));
    }
    g.identity = index(j.at("identity").get<std::string>());
    return g;
}

Json gdiagram_to_json(const GDiagram& x) {
    Json j;
    j["group"] = group_to_json(x.base_action.group);
    Json action = Json::object();
    for (std::size_t g = 0; g < x.base_action.group.elements.size(); ++g)
        action[x.base_action.group.elements[g]] = functor_maps_to_json(x.base_action.action[g]);
    j["action"] = action;
    j["diagram"] = diagram_to_json(x.diagram);
    Json structure = Json::object();
    for (std::size_t g = 0; g < x.base_action.group.elements.size(); ++g) {
        Json comp = Json::object();
        for (std::size_t i = 0; i < x.diagram.base->num_objects(); ++i)
            comp[x.diagram.base->objects[i]] = functor_maps_to_json(x.structure[g][i]);
        structure[x.base_action.group.elements[g]] = {{"components", comp}};
    }
    j["structure"] = structure;
    return j;
}

GDiagram gdiagram_from_json(const Json& j) {
    GDiagram x;
    x.base_action.group = group_from_json(j.at("group"));
    x.diagram = diagram_from_json(j.at("diagram"));
    x.base_action.carrier = x.diagram.base;
    for (const auto& e : x.base_action.group.elements) {
        if (!j.at("action").contains(e))
            throw PreconditionError("gdiagram json: missing action of " + e);
        x.base_action.action.push_back(
            functor_from_maps(j.at("action").at(e), x.diagram.base, x.diagram.base));
    }
    for (std::size_t g = 0; g < x.base_action.group.elements.size(); ++g) {
        const std::string& e = x.base_action.group.elements[g];
        if (!j.at("structure").contains(e))
            throw PreconditionError("gdiagram json: missing structure of " + e);
        const Json& comp = j.at("structure").at(e).at("components");
        std::vector<Functor> per;
        for (std::size_t i = 0; i < x.diagram.base->num_objects(); ++i) {
            const std::string& oid = x.diagram.base->objects[i];
            if (!comp.contains(oid))
                throw PreconditionError("gdiagram json: missing structure component at " + oid);
            int gi = x.base_action.action[g].omap[i];
            per.push_back(functor_from_maps(comp.at(oid), x.diagram.vertex[i], x.diagram.vertex[gi]));
        }
        x.structure.push_back(std::move(per));
    }
    return x;
}

Json simplicial_to_json(const SimplicialSet& k) {
    Json j;
    j["f_vector"] = k.f_vector();
    Json simp = Json::array();
    for (int n = 0; n <= k.dim(); ++n) simp.push_back(k.ids[n]);
    j["simplices"] = simp;
    Json faces = Json::object();
    for (int n = 1; n <= k.dim(); ++n) {
        Json level = Json::array();
        for (int i = 0; i < k.count(n); ++i) {
            Json per = Json::array();
            for (int kk = 0; kk <= n; ++kk) {
                const SimplicialValue& v = k.face(SimplexRef{n, i}, kk);
                per.push_back({{"word", degeneracy_word(v.eta)},
                               {"target", k.ids[v.ref.dim][v.ref.idx]}});
            }
            level.push_back(per);
        }
        faces[std::to_string(n)] = level;
    }
    j["faces"] = faces;
    return j;
}

Json homology_to_json(const HomologyResult& h) {
    Json degrees = Json::array();
    for (std::size_t n = 0; n < h.betti.size(); ++n) {
        Json t = Json::array();
        for (const auto& d : h.torsion[n]) t.push_back(d.get_str());
        degrees.push_back({{"degree", n}, {"betti", h.betti[n]}, {"torsion", t}});
    }
    return Json{{"degrees", degrees}};
}

Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["subject"] = rep.subject;
    j["clean"] = rep.clean();
    Json v = Json::array();
    for (const auto& viol : rep.violations)
        v.push_back({{"code", viol.code}, {"detail", viol.detail}});
    j["violations"] = v;
    return j;
}

Json reedy_report_to_json(const ReedyReport& rep) {
    Json j;
    j["check"] = "reedy";
    j["proxy_note"] = kProxyNote;
    j["pass"] = rep.pass;
    Json rows = Json::array();
    for (const auto& row : rep.rows) rows.push_back(proxy_row_to_json(row));
    j["rows"] = rows;
    return j;
}

Json equivariant_reedy_report_to_json(const EquivariantReedyReport& rep) {
    Json j;
    j["check"] = "reedy-equivariant";
    j["proxy_note"] = kProxyNote;
    j["pass"] = rep.pass;
    Json blocks = Json::array();
    for (const auto& block : rep.blocks) {
        Json rows = Json::array();
        for (const auto& row : block.rows) rows.push_back(proxy_row_to_json(row));
        blocks.push_back({{"subgroup", block.subgroup}, {"pass", block.pass}, {"rows", rows}});
    }
    j["blocks"] = blocks;
    return j;
}

Json bn_report_to_json(const BnReport& rep) {
    Json j;
    j["check"] = "bn-conditions";
    j["proxy_note"] = kProxyNote;
    j["n"] = rep.n;
    j["condition_count"] = rep.conditions.size();
    j["expected_count"] = rep.expected_count;
    j["pass"] = rep.pass && static_cast<long long>(rep.conditions.size()) == rep.expected_count;
    Json conds = Json::array();
    for (const auto& c : rep.conditions) {
        Json rows = Json::array();
        for (const auto& row : c.rows) rows.push_back(proxy_row_to_json(row));
        conds.push_back({{"k", c.k}, {"K", c.subset_k}, {"pass", c.pass}, {"rows", rows}});
    }
    j["conditions"] = conds;
    return j;
}

Json lydakis_report_to_json(const LydakisReport& rep) {
    Json j;
    j["check"] = "lydakis";
    j["pass"] = rep.pass;
    Json rows = Json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"dim", row.dim},
                        {"nerve_simplices", row.nerve_count},
                        {"mapping_space_simplices", row.mapping_count},
                        {"bijection", row.bijection},
                        {"compatible_with_faces", row.faces}});
    j["dimensions"] = rows;
    return j;
}

Json cofinality_report_to_json(const LambdaCofinalityReport& rep) {
    Json j;
    j["check"] = "cofinality";
    j["proxy_note"] = kProxyNote;
    j["pass"] = rep.over.all_contractible;
    Json rows = Json::array();
    for (const auto& row : rep.over.rows)
        rows.push_back({{"object", row.object},
                        {"contractible", row.contractible},
                        {"homology", row.homology},
                        {"verdict", verdict(row.contractible)}});
    j["over_categories"] = rows;
    Json cands = Json::array();
    for (const auto& c : rep.candidates)
        cands.push_back({{"subset", c.subset},
                         {"well_defined", c.well_defined},
                         {"initial", c.initial},
                         {"under_category_contractible", c.under_contractible}});
    j["candidate_objects"] = cands;
    j["all_candidates_initial"] = rep.all_initial;
    return j;
}

Json cube_report_to_json(const CubeCartesianReport& rep) {
    Json j;
    j["check"] = "cube-cartesian";
    j["proxy_note"] = kProxyNote;
    j["reedy_hypothesis"] = rep.reedy_ok;
    if (!rep.reedy_ok)
        j["warning"] = "Reedy quasi-fibrancy failed (homology proxy); fiber verdicts are "
                       "hypotheses-unverified";
    j["reedy"] = reedy_report_to_json(rep.reedy);
    Json fibers = Json::array();
    for (const auto& f : rep.fibers)
        fibers.push_back({{"phi", f.phi},
                          {"homology", f.homology},
                          {"contractible", f.contractible},
                          {"verdict", verdict(f.contractible)}});
    j["fibers"] = fibers;
    j["cartesian"] = rep.cartesian;
    j["pass"] = rep.cartesian && rep.reedy_ok;
    return j;
}

Json lemma_report_to_json(const LemmaIso& iso) {
    Json j;
    j["check"] = "lemma-iso";
    j["hom_le_objects"] = iso.hom_le.cat->num_objects();
    j["hom_le_morphisms"] = iso.hom_le.cat->num_morphisms();
    j["grothendieck_objects"] = iso.groth.cat->num_objects();
    j["grothendieck_morphisms"] = iso.groth.cat->num_morphisms();
    j["roundtrip_identity"] = iso.roundtrip_identity;
    j["pass"] = iso.roundtrip_identity;
    return j;
}

}  // namespace catlim
