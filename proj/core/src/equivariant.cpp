#include <algorithm>
#include <functional>
#include <set>

#include "catlim/equivariant.hpp"

namespace catlim {

int FinGroup::inverse(int g) const {
    for (std::size_t h = 0; h < elements.size(); ++h)
        if (mul[g][h] == identity && mul[h][g] == identity) return static_cast<int>(h);
    throw PreconditionError("group element without inverse: " + elements[g]);
}

ValidationReport validate_group(const FinGroup& g) {
    ValidationReport rep;
    rep.subject = "group";
    const std::size_t n = g.elements.size();
    if (g.mul.size() != n) {
        rep.add("shape", "multiplication table has wrong size");
        return rep;
    }
    for (std::size_t a = 0; a < n; ++a)
        if (g.mul[a].size() != n) {
            rep.add("shape", "multiplication table row has wrong size");
            return rep;
        }
    if (g.identity < 0 || static_cast<std::size_t>(g.identity) >= n) {
        rep.add("identity", "identity element missing");
        return rep;
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (g.mul[g.identity][a] != static_cast<int>(a) || g.mul[a][g.identity] != static_cast<int>(a))
            rep.add("unit", "identity law fails at " + g.elements[a]);
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                    rep.add("associativity", "(" + g.elements[a] + " " + g.elements[b] + ") " +
                                                 g.elements[c]);
    for (std::size_t a = 0; a < n; ++a) {
        bool has = false;
        for (std::size_t b = 0; b < n && !has; ++b)
            if (g.mul[a][b] == g.identity && g.mul[b][a] == g.identity) has = true;
        if (!has) rep.add("inverse", "no inverse for " + g.elements[a]);
    }
    return rep;
}

namespace {
std::vector<int> closure(const FinGroup& g, std::vector<int> elems) {
    std::set<int> s(elems.begin(), elems.end());
    s.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur)
                if (s.insert(g.mul[a][b]).second) grew = true;
        for (int a : cur)
            if (s.insert(g.inverse(a)).second) grew = true;
    }
    return std::vector<int>(s.begin(), s.end());
}
}  // namespace

std::vector<std::vector<int>> subgroups(const FinGroup& g) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial = closure(g, {});
    found.insert(trivial);
    queue.push_back(trivial);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        std::set<int> hs(h.begin(), h.end());
        for (std::size_t e = 0; e < g.elements.size(); ++e) {
            if (hs.count(static_cast<int>(e))) continue;
            std::vector<int> ext = h;
            ext.push_back(static_cast<int>(e));
            std::vector<int> cl = closure(g, ext);
            if (found.insert(cl).second) queue.push_back(cl);
        }
    }
    std::vector<std::vector<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

FinGroup subgroup_group(const FinGroup& g, const std::vector<int>& elems) {
    FinGroup out;
    std::vector<int> pos(g.elements.size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        pos[elems[i]] = static_cast<int>(i);
        out.elements.push_back(g.elements[elems[i]]);
    }
    out.mul.assign(elems.size(), std::vector<int>(elems.size(), -1));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            int p = pos[g.mul[elems[a]][elems[b]]];
            if (p < 0) throw PreconditionError("subgroup_group: set is not closed");
            out.mul[a][b] = p;
        }
    out.identity = pos[g.identity];
    if (out.identity < 0) throw PreconditionError("subgroup_group: identity missing");
    return out;
}

ValidationReport validate_g_action(const CategoryGAction& a) {
    ValidationReport rep;
    rep.subject = "category action";
    const std::size_t n = a.group.elements.size();
    if (a.action.size() != n) {
        rep.add("shape", "one functor per group element required");
        return rep;
    }
    for (std::size_t g = 0; g < n; ++g) {
        auto sub = check_functor(a.action[g]);
        for (auto& v : sub.violations)
            rep.add("functor-" + v.code, "action of " + a.group.elements[g] + ": " + v.detail);
    }
    if (!rep.clean()) return rep;
    if (!functor_equal(a.action[a.group.identity], identity_functor(a.carrier)))
        rep.add("unit", "action of the identity is not the identity functor");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (!functor_equal(compose_functors(a.action[g], a.action[h]), a.action[a.group.mul[g][h]]))
                rep.add("cocycle", "action(" + a.group.elements[g] + ") o action(" +
                                       a.group.elements[h] + ") != action(product)");
    return rep;
}

Subcategory fixed_category(const CategoryGAction& a, const std::vector<int>& subgroup_elems) {
    const FinCategory& c = *a.carrier;
    Subcategory out;
    CatBuilder b;
    std::vector<int> new_obj(c.num_objects(), -1);
    for (std::size_t o = 0; o < c.num_objects(); ++o) {
        bool fixed = true;
        for (int h : subgroup_elems)
            if (a.action[h].omap[o] != static_cast<int>(o)) fixed = false;
        if (!fixed) continue;
        new_obj[o] = b.add_object(c.objects[o]);
        out.object_of.push_back(static_cast<int>(o));
    }
    std::vector<int> new_mor(c.num_morphisms(), -1);
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        if (new_obj[c.morphisms[m].src] < 0 || new_obj[c.morphisms[m].tgt] < 0) continue;
        bool fixed = true;
        for (int h : subgroup_elems)
            if (a.action[h].mmap[m] != static_cast<int>(m)) fixed = false;
        if (!fixed) continue;
        new_mor[m] = b.add_morphism(c.morphisms[m].id, new_obj[c.morphisms[m].src],
                                    new_obj[c.morphisms[m].tgt]);
        out.morphism_of.push_back(static_cast<int>(m));
    }
    for (std::size_t o = 0; o < out.object_of.size(); ++o) {
        int im = new_mor[c.identity[out.object_of[o]]];
        if (im < 0) throw PreconditionError("fixed_category: identity not fixed");
        b.set_identity(static_cast<int>(o), im);
    }
    for (int g : out.morphism_of)
        for (int f : out.morphism_of) {
            auto gf = c.try_compose(g, f);
            if (!gf) continue;
            if (new_mor[*gf] < 0)
                throw PreconditionError("fixed_category: composite of fixed morphisms not fixed");
            b.set_compose(new_mor[g], new_mor[f], new_mor[*gf]);
        }
    out.cat = b.freeze();
    out.inclusion.src = out.cat;
    out.inclusion.tgt = a.carrier;
    out.inclusion.omap = out.object_of;
    out.inclusion.mmap = out.morphism_of;
    return out;
}

ValidationReport validate_g_diagram(const GDiagram& x) {
    ValidationReport rep;
    rep.subject = "equivariant diagram";
    auto base_rep = validate_g_action(x.base_action);
    for (auto& v : base_rep.violations) rep.add("base-" + v.code, v.detail);
    auto dia_rep = check_diagram(x.diagram);
    for (auto& v : dia_rep.violations) rep.add("diagram-" + v.code, v.detail);
    const FinGroup& grp = x.base_action.group;
    const FinCategory& base = *x.diagram.base;
    if (x.structure.size() != grp.elements.size()) {
        rep.add("shape", "one structure transformation per group element required");
        return rep;
    }
    for (std::size_t g = 0; g < grp.elements.size(); ++g) {
        if (x.structure[g].size() != base.num_objects()) {
            rep.add("shape", "structure of " + grp.elements[g] + " has wrong arity");
            return rep;
        }
        for (std::size_t i = 0; i < base.num_objects(); ++i) {
            const Functor& f = x.structure[g][i];
            int gi = x.base_action.action[g].omap[i];
            if (!f.src->same_data(*x.diagram.vertex[i]) || !f.tgt->same_data(*x.diagram.vertex[gi]))
                rep.add("typing", "structure of " + grp.elements[g] + " at " + base.objects[i]);
            else {
                auto sub = check_functor(f);
                for (auto& v : sub.violations)
                    rep.add("structure-" + v.code,
                            grp.elements[g] + " at " + base.objects[i] + ": " + v.detail);
            }
        }
    }
    if (!rep.clean()) return rep;
    for (std::size_t i = 0; i < base.num_objects(); ++i)
        if (!functor_equal(x.structure[grp.identity][i], identity_functor(x.diagram.vertex[i])))
            rep.add("unit", "structure of the identity at " + base.objects[i] + " is not id");
    // naturality: X_{g a} o g_i = g_j o X_a
    for (std::size_t g = 0; g < grp.elements.size(); ++g)
        for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
            const Morphism& mor = base.morphisms[m];
            int gm = x.base_action.action[g].mmap[m];
            Functor lhs = compose_functors(x.diagram.transition[gm], x.structure[g][mor.src]);
            Functor rhs = compose_functors(x.structure[g][mor.tgt], x.diagram.transition[m]);
            if (!functor_equal(lhs, rhs))
                rep.add("naturality",
                        "structure of " + grp.elements[g] + " at " + mor.id + " is not natural");
        }
    // cocycle: (gh)_i = g_{h i} o h_i
    for (std::size_t g = 0; g < grp.elements.size(); ++g)
        for (std::size_t h = 0; h < grp.elements.size(); ++h)
            for (std::size_t i = 0; i < base.num_objects(); ++i) {
                int hi = x.base_action.action[h].omap[i];
                Functor lhs = x.structure[grp.mul[g][h]][i];
                Functor rhs = compose_functors(x.structure[g][hi], x.structure[h][i]);
                if (!functor_equal(lhs, rhs))
                    rep.add("cocycle", "(" + grp.elements[g] + " " + grp.elements[h] + ") at " +
                                           base.objects[i]);
            }
    return rep;
}

GDiagram constant_g_diagram(const CategoryGAction& base, const CatPtr& value) {
    GDiagram out;
    out.base_action = base;
    out.diagram = constant_diagram(base.carrier, value);
    out.structure.assign(base.group.elements.size(),
                         std::vector<Functor>(base.carrier->num_objects(), identity_functor(value)));
    return out;
}

GDiagram overcat_gdiagram(const CategoryGAction& a, const OvercatDiagram& over) {
    GDiagram out;
    out.base_action = a;
    out.diagram = over.diagram;
    const FinCategory& k = *a.carrier;
    for (std::size_t g = 0; g < a.group.elements.size(); ++g) {
        std::vector<Functor> per_obj;
        for (std::size_t o = 0; o < k.num_objects(); ++o) {
            int go = a.action[g].omap[o];
            const SliceCategory& src = over.slices[o];
            const SliceCategory& tgt = over.slices[go];
            Functor f;
            f.src = src.cat;
            f.tgt = tgt.cat;
            f.omap.resize(src.cat->num_objects());
            for (std::size_t s = 0; s < src.object_mor.size(); ++s) {
                int img = a.action[g].mmap[src.object_mor[s]];
                int idx = tgt.cat->object_index(k.morphisms[img].id);
                if (idx < 0) throw PreconditionError("overcat_gdiagram: image object missing");
                f.omap[s] = idx;
            }
            f.mmap.resize(src.cat->num_morphisms());
            for (std::size_t m = 0; m < src.cat->num_morphisms(); ++m) {
                int so = src.cat->morphisms[m].src, to = src.cat->morphisms[m].tgt;
                int u = src.projection.mmap[m];
                std::string id = "(" + k.morphisms[a.action[g].mmap[src.object_mor[so]]].id + ">" +
                                 k.morphisms[a.action[g].mmap[u]].id + ">" +
                                 k.morphisms[a.action[g].mmap[src.object_mor[to]]].id + ")";
                int idx = tgt.cat->morphism_index(id);
                if (idx < 0) throw PreconditionError("overcat_gdiagram: image morphism missing");
                f.mmap[m] = idx;
            }
            per_obj.push_back(std::move(f));
        }
        out.structure.push_back(std::move(per_obj));
    }
    return out;
}

CategoryGAction conjugation_action_on_hom(const GDiagram& y, const GDiagram& x,
                                          const HomCategory& hom) {
    const FinGroup& grp = y.base_action.group;
    const FinCategory& base = *y.diagram.base;
    CategoryGAction out;
    out.group = grp;
    out.carrier = hom.cat;
    for (std::size_t g = 0; g < grp.elements.size(); ++g) {
        int ginv = grp.inverse(static_cast<int>(g));
        Functor f;
        f.src = hom.cat;
        f.tgt = hom.cat;
        f.omap.resize(hom.cat->num_objects());
        for (std::size_t o = 0; o < hom.objects.size(); ++o) {
            DiagramMap img;
            for (std::size_t i = 0; i < base.num_objects(); ++i) {
                int gi_inv = y.base_action.action[ginv].omap[i];
                Functor comp = compose_functors(
                    x.structure[g][gi_inv],
                    compose_functors(hom.objects[o].component[gi_inv], y.structure[ginv][i]));
                img.component.push_back(std::move(comp));
            }
            int idx = hom.find_object(img);
            if (idx < 0) throw PreconditionError("conjugation: image family missing");
            f.omap[o] = idx;
        }
        f.mmap.resize(hom.cat->num_morphisms());
        for (std::size_t m = 0; m < hom.morphisms.size(); ++m) {
            const Modification& mod = hom.morphisms[m];
            Modification img;
            img.src = f.omap[mod.src];
            img.tgt = f.omap[mod.tgt];
            for (std::size_t i = 0; i < base.num_objects(); ++i) {
                int gi_inv = y.base_action.action[ginv].omap[i];
                NatTrans nt;
                nt.source = hom.objects[img.src].component[i];
                nt.target = hom.objects[img.tgt].component[i];
                nt.component.resize(y.diagram.vertex[i]->num_objects());
                for (std::size_t yo = 0; yo < nt.component.size(); ++yo) {
                    int moved = y.structure[ginv][i].omap[yo];
                    nt.component[yo] =
                        x.structure[g][gi_inv].mmap[mod.component[gi_inv].component[moved]];
                }
                img.component.push_back(std::move(nt));
            }
            int idx = hom.find_morphism(img);
            if (idx < 0) throw PreconditionError("conjugation: image modification missing");
            f.mmap[m] = idx;
        }
        out.action.push_back(std::move(f));
    }
    return out;
}

std::vector<int> stabilizer(const CategoryGAction& a, const std::vector<int>& objs) {
    std::set<int> want(objs.begin(), objs.end());
    std::vector<int> out;
    for (std::size_t g = 0; g < a.group.elements.size(); ++g) {
        std::set<int> img;
        for (int o : objs) img.insert(a.action[g].omap[o]);
        if (img == want) out.push_back(static_cast<int>(g));
    }
    return out;
}

CategoryGAction slice_action(const CategoryGAction& ambient, const FinGroup& group,
                             const std::vector<int>& subgroup_elems, const SliceCategory& slice) {
    (void)group;
    CategoryGAction out;
    out.group = subgroup_group(ambient.group, subgroup_elems);
    out.carrier = slice.cat;
    const FinCategory& c = *ambient.carrier;
    for (int h : subgroup_elems) {
        Functor f;
        f.src = slice.cat;
        f.tgt = slice.cat;
        f.omap.resize(slice.cat->num_objects());
        for (std::size_t o = 0; o < slice.object_mor.size(); ++o) {
            int img = ambient.action[h].mmap[slice.object_mor[o]];
            int idx = slice.cat->object_index(c.morphisms[img].id);
            if (idx < 0) throw PreconditionError("slice_action: image object missing");
            f.omap[o] = idx;
        }
        f.mmap.resize(slice.cat->num_morphisms());
        for (std::size_t m = 0; m < slice.cat->num_morphisms(); ++m) {
            int so = slice.cat->morphisms[m].src;
            int delta = slice.projection.mmap[m];
            std::string id = "(" + c.morphisms[ambient.action[h].mmap[slice.object_mor[so]]].id +
                             ">" + c.morphisms[ambient.action[h].mmap[delta]].id + ")";
            int idx = slice.cat->morphism_index(id);
            if (idx < 0) throw PreconditionError("slice_action: image morphism missing");
            f.mmap[m] = idx;
        }
        out.action.push_back(std::move(f));
    }
    return out;
}

namespace {
// H-structures on the data underlying a matching functor at an H-fixed object
struct MatchingActions {
    CategoryGAction strict_act;
    GDiagram over_gd;
    GDiagram restricted_gd;
    CategoryGAction dom;  // on X_i
    CategoryGAction hom;  // conjugation on the hom category
};

MatchingActions matching_actions(const GDiagram& x, const MatchingFunctor& m, int i,
                                 const std::vector<int>& subgroup_elems) {
    MatchingActions out;
    out.strict_act = slice_action(x.base_action, x.base_action.group, subgroup_elems, m.strict);
    out.over_gd = overcat_gdiagram(out.strict_act, m.over);
    out.restricted_gd.base_action = out.strict_act;
    out.restricted_gd.diagram = m.restricted;
    const FinCategory& base = *x.diagram.base;
    for (std::size_t hpos = 0; hpos < subgroup_elems.size(); ++hpos) {
        int h = subgroup_elems[hpos];
        std::vector<Functor> per_obj;
        for (std::size_t a = 0; a < m.strict.object_mor.size(); ++a) {
            int j = base.morphisms[m.strict.object_mor[a]].tgt;
            per_obj.push_back(x.structure[h][j]);
        }
        out.restricted_gd.structure.push_back(std::move(per_obj));
    }
    out.dom.group = out.strict_act.group;
    out.dom.carrier = x.diagram.vertex[i];
    for (int h : subgroup_elems) out.dom.action.push_back(x.structure[h][i]);
    out.hom = conjugation_action_on_hom(out.over_gd, out.restricted_gd, m.hom);
    return out;
}
}  // namespace

EquivariantMatching equivariant_matching(const GDiagram& x, int i,
                                         const std::vector<int>& subgroup_elems, Budget& budget) {
    for (int h : subgroup_elems)
        if (x.base_action.action[h].omap[i] != i)
            throw PreconditionError("equivariant_matching: object is not fixed by the subgroup");
    EquivariantMatching out;
    out.matching = matching_functor(x.diagram, i, budget);
    out.subgroup = subgroup_group(x.base_action.group, subgroup_elems);
    MatchingActions acts = matching_actions(x, out.matching, i, subgroup_elems);
    out.dom_action = acts.dom;
    out.hom_action = acts.hom;
    out.fixed_dom = fixed_category(out.dom_action, [&] {
        std::vector<int> all(subgroup_elems.size());
        for (std::size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t);
        return all;
    }());
    out.fixed_cod = fixed_category(out.hom_action, [&] {
        std::vector<int> all(subgroup_elems.size());
        for (std::size_t t = 0; t < all.size(); ++t) all[t] = static_cast<int>(t);
        return all;
    }());
    out.equivariant = true;
    for (std::size_t t = 0; t < subgroup_elems.size(); ++t) {
        Functor lhs = compose_functors(out.matching.fun, out.dom_action.action[t]);
        Functor rhs = compose_functors(out.hom_action.action[t], out.matching.fun);
        if (!functor_equal(lhs, rhs)) out.equivariant = false;
    }
    // restriction to the fixed points
    out.fun.src = out.fixed_dom.cat;
    out.fun.tgt = out.fixed_cod.cat;
    std::vector<int> cod_at(out.matching.hom.cat->num_objects(), -1);
    for (std::size_t o = 0; o < out.fixed_cod.object_of.size(); ++o)
        cod_at[out.fixed_cod.object_of[o]] = static_cast<int>(o);
    std::vector<int> cod_mat(out.matching.hom.cat->num_morphisms(), -1);
    for (std::size_t m = 0; m < out.fixed_cod.morphism_of.size(); ++m)
        cod_mat[out.fixed_cod.morphism_of[m]] = static_cast<int>(m);
    out.fun.omap.resize(out.fixed_dom.cat->num_objects());
    for (std::size_t o = 0; o < out.fixed_dom.object_of.size(); ++o) {
        int img = out.matching.fun.omap[out.fixed_dom.object_of[o]];
        if (cod_at[img] < 0)
            throw PreconditionError("equivariant_matching: image of a fixed object is not fixed");
        out.fun.omap[o] = cod_at[img];
    }
    out.fun.mmap.resize(out.fixed_dom.cat->num_morphisms());
    for (std::size_t m = 0; m < out.fixed_dom.morphism_of.size(); ++m) {
        int img = out.matching.fun.mmap[out.fixed_dom.morphism_of[m]];
        if (cod_mat[img] < 0)
            throw PreconditionError("equivariant_matching: image of a fixed morphism is not fixed");
        out.fun.mmap[m] = cod_mat[img];
    }
    return out;
}

EquivariantReedyReport equivariant_reedy_check(const GDiagram& x, Budget& budget) {
    degree_function(*x.diagram.base);
    EquivariantReedyReport rep;
    auto subs = subgroups(x.base_action.group);
    for (const auto& sub : subs) {
        EquivariantReedyBlock block;
        for (int h : sub) block.subgroup.push_back(x.base_action.group.elements[h]);
        Subcategory fixed_base = fixed_category(x.base_action, sub);
        for (std::size_t fo = 0; fo < fixed_base.object_of.size(); ++fo) {
            int i = fixed_base.object_of[fo];
            EquivariantMatching em = equivariant_matching(x, i, sub, budget);
            auto rows =
                proxy_rows_for_functor(em.fun, "i=" + x.diagram.base->objects[i] + " ", budget);
            for (auto& row : rows) {
                if (!row.pass) block.pass = false;
                block.rows.push_back(std::move(row));
            }
        }
        if (!block.pass) rep.pass = false;
        rep.blocks.push_back(std::move(block));
    }
    return rep;
}

CategoryGAction grothendieck_g_action(const GDiagram& y, const Grothendieck& gr) {
    CategoryGAction out;
    out.group = y.base_action.group;
    out.carrier = gr.cat;
    const FinCategory& base = *y.diagram.base;
    for (std::size_t g = 0; g < out.group.elements.size(); ++g) {
        Functor f;
        f.src = gr.cat;
        f.tgt = gr.cat;
        f.omap.resize(gr.cat->num_objects());
        for (std::size_t o = 0; o < gr.object_parts.size(); ++o) {
            auto [k, c] = gr.object_parts[o];
            int gk = y.base_action.action[g].omap[k];
            int gc = y.structure[g][k].omap[c];
            int idx = gr.find_object(gk, gc);
            if (idx < 0) throw PreconditionError("grothendieck action: image object missing");
            f.omap[o] = idx;
        }
        f.mmap.resize(gr.cat->num_morphisms());
        for (std::size_t m = 0; m < gr.morphism_parts.size(); ++m) {
            auto [so, to, alpha, delta] = gr.morphism_parts[m];
            int l = base.morphisms[alpha].tgt;
            int galpha = y.base_action.action[g].mmap[alpha];
            int gdelta = y.structure[g][l].mmap[delta];
            int idx = gr.find_morphism(f.omap[so], galpha, gdelta);
            if (idx < 0) throw PreconditionError("grothendieck action: image morphism missing");
            f.mmap[m] = idx;
        }
        out.action.push_back(std::move(f));
    }
    return out;
}

LemmaEquivariance lemma_iso_equivariance(const GDiagram& x, const LemmaIso& iso, Budget& budget) {
    (void)budget;
    LemmaEquivariance out;
    const FUData& fu = iso.fu;
    out.stabilizer_elems = stabilizer(x.base_action, fu.u_objs);
    const std::vector<int>& stab = out.stabilizer_elems;
    FinGroup sgrp = subgroup_group(x.base_action.group, stab);
    const FinCategory& base = *x.diagram.base;

    // conjugation action on Hom((U<=I)/(-), X_{U<=})
    CategoryGAction le_act = slice_action(x.base_action, x.base_action.group, stab, fu.uu.le);
    OvercatDiagram over_le = overcat_diagram(fu.uu.le.cat);
    GDiagram yle = overcat_gdiagram(le_act, over_le);
    yle.diagram = iso.hom_le.source;
    GDiagram xle;
    xle.base_action = le_act;
    xle.diagram = iso.hom_le.target;
    for (std::size_t t = 0; t < stab.size(); ++t) {
        std::vector<Functor> per;
        for (std::size_t la = 0; la < fu.uu.le.object_mor.size(); ++la)
            per.push_back(x.structure[stab[t]][base.morphisms[fu.uu.le.object_mor[la]].tgt]);
        xle.structure.push_back(std::move(per));
    }
    CategoryGAction a_act = conjugation_action_on_hom(yle, xle, iso.hom_le);

    // conjugation action on Hom((U<I)/(-), X_{U<})
    CategoryGAction lt_act = slice_action(x.base_action, x.base_action.group, stab, fu.uu.lt);
    OvercatDiagram over_lt = overcat_diagram(fu.uu.lt.cat);
    GDiagram ylt = overcat_gdiagram(lt_act, over_lt);
    ylt.diagram = fu.hom_lt.source;
    GDiagram xlt;
    xlt.base_action = lt_act;
    xlt.diagram = fu.hom_lt.target;
    for (std::size_t t = 0; t < stab.size(); ++t) {
        std::vector<Functor> per;
        for (std::size_t la = 0; la < fu.uu.lt.object_mor.size(); ++la)
            per.push_back(x.structure[stab[t]][base.morphisms[fu.uu.lt.object_mor[la]].tgt]);
        xlt.structure.push_back(std::move(per));
    }
    CategoryGAction h_act = conjugation_action_on_hom(ylt, xlt, fu.hom_lt);

    const std::size_t nu = fu.u_objs.size();
    std::vector<int> pos_of_u(base.num_objects(), -1);
    for (std::size_t p = 0; p < nu; ++p) pos_of_u[fu.u_objs[p]] = static_cast<int>(p);

    // transport of an H_u object/morphism to H_{hu} along h
    auto transport_obj = [&](std::size_t p, std::size_t p2, int h, int obj) {
        const MatchingFunctor& mu = fu.matching[p];
        const MatchingFunctor& mu2 = fu.matching[p2];
        DiagramMap img;
        for (std::size_t b2 = 0; b2 < mu2.strict.object_mor.size(); ++b2) {
            int beta2 = mu2.strict.object_mor[b2];  // ambient, hu -> j2
            int hinv = x.base_action.group.inverse(h);
            int beta = x.base_action.action[hinv].mmap[beta2];
            int b = mu.strict.cat->object_index(base.morphisms[beta].id);
            if (b < 0) throw PreconditionError("transport: strict object missing");
            // relabel the slice over beta2 back to the slice over beta
            const CatPtr s2 = mu2.over.slices[b2].cat;
            const CatPtr s1 = mu.over.slices[b].cat;
            Functor relabel;
            relabel.src = s2;
            relabel.tgt = s1;
            relabel.omap.resize(s2->num_objects());
            for (std::size_t so = 0; so < mu2.over.slices[b2].object_mor.size(); ++so) {
                int smor = mu2.over.slices[b2].object_mor[so];  // morphism of strict_{hu}
                int bobj = mu2.strict.cat->morphisms[smor].src;
                int bamb = mu2.strict.object_mor[bobj];
                int damb = mu2.strict.projection.mmap[smor];
                std::string id = "(" + base.morphisms[x.base_action.action[hinv].mmap[bamb]].id +
                                 ">" + base.morphisms[x.base_action.action[hinv].mmap[damb]].id +
                                 ")";
                int idx = s1->object_index(id);
                if (idx < 0) throw PreconditionError("transport: slice object missing");
                relabel.omap[so] = idx;
            }
            relabel.mmap.resize(s2->num_morphisms());
            for (std::size_t sm = 0; sm < s2->num_morphisms(); ++sm) {
                int so = s2->morphisms[sm].src, to = s2->morphisms[sm].tgt;
                int w = mu2.over.slices[b2].projection.mmap[sm];  // morphism of strict_{hu}
                int wb = mu2.strict.cat->morphisms[w].src;
                int wamb = mu2.strict.object_mor[wb];
                int wd = mu2.strict.projection.mmap[w];
                std::string wid = "(" + base.morphisms[x.base_action.action[hinv].mmap[wamb]].id +
                                  ">" + base.morphisms[x.base_action.action[hinv].mmap[wd]].id + ")";
                std::string id = "(" + s1->objects[relabel.omap[so]] + ">" + wid + ">" +
                                 s1->objects[relabel.omap[to]] + ")";
                int idx = s1->morphism_index(id);
                if (idx < 0) throw PreconditionError("transport: slice morphism missing");
                relabel.mmap[sm] = idx;
            }
            int j = base.morphisms[beta].tgt;
            Functor comp = compose_functors(
                x.structure[h][j],
                compose_functors(fu.matching[p].hom.objects[obj].component[b], relabel));
            img.component.push_back(std::move(comp));
        }
        int idx = mu2.hom.find_object(img);
        if (idx < 0) throw PreconditionError("transport: image family missing");
        return idx;
    };

    auto transport_mor = [&](std::size_t p, std::size_t p2, int h, int mor) {
        const MatchingFunctor& mu = fu.matching[p];
        const MatchingFunctor& mu2 = fu.matching[p2];
        const Modification& mod = mu.hom.morphisms[mor];
        Modification img;
        img.src = transport_obj(p, p2, h, mod.src);
        img.tgt = transport_obj(p, p2, h, mod.tgt);
        int hinv = x.base_action.group.inverse(h);
        for (std::size_t b2 = 0; b2 < mu2.strict.object_mor.size(); ++b2) {
            int beta2 = mu2.strict.object_mor[b2];
            int beta = x.base_action.action[hinv].mmap[beta2];
            int b = mu.strict.cat->object_index(base.morphisms[beta].id);
            int j = base.morphisms[beta].tgt;
            NatTrans nt;
            nt.source = mu2.hom.objects[img.src].component[b2];
            nt.target = mu2.hom.objects[img.tgt].component[b2];
            nt.component.resize(mu2.over.slices[b2].cat->num_objects());
            for (std::size_t so = 0; so < nt.component.size(); ++so) {
                int smor = mu2.over.slices[b2].object_mor[so];
                int bobj = mu2.strict.cat->morphisms[smor].src;
                int bamb = mu2.strict.object_mor[bobj];
                int damb = mu2.strict.projection.mmap[smor];
                std::string id = "(" + base.morphisms[x.base_action.action[hinv].mmap[bamb]].id +
                                 ">" + base.morphisms[x.base_action.action[hinv].mmap[damb]].id +
                                 ")";
                int back = mu.over.slices[b].cat->object_index(id);
                nt.component[so] = x.structure[h][j].mmap[mod.component[b].component[back]];
            }
            img.component.push_back(std::move(nt));
        }
        int idx = mu2.hom.find_morphism(img);
        if (idx < 0) throw PreconditionError("transport: image modification missing");
        return idx;
    };

    // action on the Grothendieck construction of F_U
    CategoryGAction b_act;
    b_act.group = sgrp;
    b_act.carrier = iso.groth.cat;
    for (std::size_t t = 0; t < stab.size(); ++t) {
        int h = stab[t];
        Functor f;
        f.src = iso.groth.cat;
        f.tgt = iso.groth.cat;
        f.omap.resize(iso.groth.cat->num_objects());
        for (std::size_t o = 0; o < iso.groth.object_parts.size(); ++o) {
            auto [phi, prod_obj] = iso.groth.object_parts[o];
            int hphi = h_act.action[t].omap[phi];
            std::vector<int> parts = fu.product[phi].object_factors(prod_obj);
            std::vector<int> new_parts(nu);
            for (std::size_t p = 0; p < nu; ++p) {
                int u = fu.u_objs[p];
                int hu = x.base_action.action[h].omap[u];
                int p2 = pos_of_u[hu];
                int x_u = fu.comma[phi][p].object_a[parts[p]];
                int psi_u = fu.comma[phi][p].object_phi[parts[p]];
                int x2 = x.structure[h][u].omap[x_u];
                int psi2 = transport_mor(p, p2, h, psi_u);
                int cidx = fu.comma[hphi][p2].find_object(x2, psi2);
                if (cidx < 0) throw PreconditionError("lemma action: comma image missing");
                new_parts[p2] = cidx;
            }
            int idx = iso.groth.find_object(hphi, fu.product[hphi].object_tuple(new_parts));
            if (idx < 0) throw PreconditionError("lemma action: object image missing");
            f.omap[o] = idx;
        }
        f.mmap.resize(iso.groth.cat->num_morphisms());
        for (std::size_t m = 0; m < iso.groth.morphism_parts.size(); ++m) {
            auto [so, to, lam, zeta] = iso.groth.morphism_parts[m];
            auto [sphi, sprod] = iso.groth.object_parts[so];
            auto [tphi, tprod] = iso.groth.object_parts[to];
            int hlam = h_act.action[t].mmap[lam];
            int htphi = h_act.action[t].omap[tphi];
            std::vector<int> zparts = fu.product[tphi].morphism_factors(zeta);
            std::vector<int> new_z(nu);
            for (std::size_t p = 0; p < nu; ++p) {
                int u = fu.u_objs[p];
                int hu = x.base_action.action[h].omap[u];
                int p2 = pos_of_u[hu];
                const CommaCategory& ct = fu.comma[tphi][p];
                const CommaCategory& ct2 = fu.comma[htphi][p2];
                int csrc = ct.cat->morphisms[zparts[p]].src;
                int ctgt = ct.cat->morphisms[zparts[p]].tgt;
                int f_u = ct.projection.mmap[zparts[p]];
                int src2 = ct2.find_object(x.structure[h][u].omap[ct.object_a[csrc]],
                                           transport_mor(p, p2, h, ct.object_phi[csrc]));
                int tgt2 = ct2.find_object(x.structure[h][u].omap[ct.object_a[ctgt]],
                                           transport_mor(p, p2, h, ct.object_phi[ctgt]));
                if (src2 < 0 || tgt2 < 0)
                    throw PreconditionError("lemma action: comma endpoint missing");
                std::string id = "(" + ct2.cat->objects[src2] + ">" +
                                 x.diagram.vertex[hu]->morphisms[x.structure[h][u].mmap[f_u]].id +
                                 ">" + ct2.cat->objects[tgt2] + ")";
                int cm = ct2.cat->morphism_index(id);
                if (cm < 0) throw PreconditionError("lemma action: comma morphism missing");
                new_z[p2] = cm;
            }
            int idx = iso.groth.find_morphism(f.omap[so], hlam, fu.product[htphi].morphism_tuple(new_z));
            if (idx < 0) throw PreconditionError("lemma action: morphism image missing");
            f.mmap[m] = idx;
        }
        b_act.action.push_back(std::move(f));
    }

    auto a_valid = validate_g_action(a_act);
    auto b_valid = validate_g_action(b_act);
    if (!a_valid.clean()) {
        out.ok = false;
        out.failures.push_back("conjugation action on the hom side is not a group action");
    }
    if (!b_valid.clean()) {
        out.ok = false;
        out.failures.push_back("induced action on the Grothendieck side is not a group action");
    }
    for (std::size_t t = 0; t < stab.size(); ++t) {
        Functor lhs = compose_functors(iso.theta, b_act.action[t]);
        Functor rhs = compose_functors(a_act.action[t], iso.theta);
        if (!functor_equal(lhs, rhs)) {
            out.ok = false;
            out.failures.push_back("theta does not commute with " +
                                   x.base_action.group.elements[stab[t]]);
        }
    }
    return out;
}

}  // namespace catlim
