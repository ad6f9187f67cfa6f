#include <functional>
#include <map>

#include "catlim/holim.hpp"

namespace catlim {

OvercatDiagram overcat_diagram(const CatPtr& k) {
    OvercatDiagram out;
    out.base = k;
    for (std::size_t o = 0; o < k->num_objects(); ++o)
        out.slices.push_back(over_category(k, static_cast<int>(o)));
    // reverse maps: ambient morphism -> slice object index
    std::vector<std::map<int, int>> obj_at(k->num_objects());
    for (std::size_t o = 0; o < k->num_objects(); ++o)
        for (std::size_t s = 0; s < out.slices[o].object_mor.size(); ++s)
            obj_at[o][out.slices[o].object_mor[s]] = static_cast<int>(s);
    out.diagram.base = k;
    for (std::size_t o = 0; o < k->num_objects(); ++o) out.diagram.vertex.push_back(out.slices[o].cat);
    for (std::size_t d = 0; d < k->num_morphisms(); ++d) {
        const Morphism& delta = k->morphisms[d];
        const SliceCategory& sk = out.slices[delta.src];
        const SliceCategory& sl = out.slices[delta.tgt];
        Functor t;
        t.src = sk.cat;
        t.tgt = sl.cat;
        t.omap.resize(sk.cat->num_objects());
        for (std::size_t s = 0; s < sk.object_mor.size(); ++s)
            t.omap[s] = obj_at[delta.tgt].at(k->compose(static_cast<int>(d), sk.object_mor[s]));
        t.mmap.resize(sk.cat->num_morphisms());
        for (std::size_t m = 0; m < sk.cat->num_morphisms(); ++m) {
            int so = sk.cat->morphisms[m].src, to = sk.cat->morphisms[m].tgt;
            int u = sk.projection.mmap[m];
            int phi2 = k->compose(static_cast<int>(d), sk.object_mor[so]);
            int psi2 = k->compose(static_cast<int>(d), sk.object_mor[to]);
            std::string id = "(" + k->morphisms[phi2].id + ">" + k->morphisms[u].id + ">" +
                             k->morphisms[psi2].id + ")";
            int img = sl.cat->morphism_index(id);
            if (img < 0) throw PreconditionError("overcat_diagram: missing image morphism");
            t.mmap[m] = img;
        }
        out.diagram.transition.push_back(std::move(t));
    }
    return out;
}

Diagram restrict_diagram(const Diagram& x, const Functor& proj) {
    Diagram out;
    out.base = proj.src;
    for (std::size_t o = 0; o < proj.omap.size(); ++o) out.vertex.push_back(x.vertex[proj.omap[o]]);
    for (std::size_t m = 0; m < proj.mmap.size(); ++m)
        out.transition.push_back(x.transition[proj.mmap[m]]);
    return out;
}

MatchingFunctor matching_functor(const Diagram& x, int i, Budget& budget) {
    MatchingFunctor out;
    out.object = i;
    out.strict = strict_under(x.base, i);
    out.over = overcat_diagram(out.strict.cat);
    out.restricted = restrict_diagram(x, out.strict.projection);
    out.hom = hom_category(out.over.diagram, out.restricted, budget);
    const CatPtr& xi = x.vertex[i];
    out.fun.src = xi;
    out.fun.tgt = out.hom.cat;
    out.fun.omap.resize(xi->num_objects());
    for (std::size_t ox = 0; ox < xi->num_objects(); ++ox) {
        DiagramMap dm;
        for (std::size_t a = 0; a < out.strict.object_mor.size(); ++a) {
            int alpha = out.strict.object_mor[a];  // ambient morphism i -> j
            int img = x.transition[alpha].omap[ox];
            Functor constant;
            constant.src = out.over.slices[a].cat;
            constant.tgt = out.restricted.vertex[a];
            constant.omap.assign(constant.src->num_objects(), img);
            constant.mmap.assign(constant.src->num_morphisms(), constant.tgt->identity[img]);
            dm.component.push_back(std::move(constant));
        }
        int idx = out.hom.find_object(dm);
        if (idx < 0) throw PreconditionError("matching_functor: constant family not found");
        out.fun.omap[ox] = idx;
    }
    out.fun.mmap.resize(xi->num_morphisms());
    for (std::size_t mx = 0; mx < xi->num_morphisms(); ++mx) {
        Modification mod;
        mod.src = out.fun.omap[xi->morphisms[mx].src];
        mod.tgt = out.fun.omap[xi->morphisms[mx].tgt];
        for (std::size_t a = 0; a < out.strict.object_mor.size(); ++a) {
            int alpha = out.strict.object_mor[a];
            int img = x.transition[alpha].mmap[mx];
            NatTrans nt;
            nt.source = out.hom.objects[mod.src].component[a];
            nt.target = out.hom.objects[mod.tgt].component[a];
            nt.component.assign(out.over.slices[a].cat->num_objects(), img);
            mod.component.push_back(std::move(nt));
        }
        int idx = out.hom.find_morphism(mod);
        if (idx < 0) throw PreconditionError("matching_functor: constant modification not found");
        out.fun.mmap[mx] = idx;
    }
    return out;
}

std::vector<ProxyCheckRow> proxy_rows_for_functor(const Functor& fun,
                                                  const std::string& condition_prefix,
                                                  Budget& budget) {
    std::vector<ProxyCheckRow> rows;
    // commas are revisited per morphism; build each once
    std::vector<std::optional<CommaCategory>> comma(fun.tgt->num_objects());
    std::vector<std::optional<NerveResult>> nerves(fun.tgt->num_objects());
    auto at = [&](int phi) {
        if (!comma[phi]) {
            comma[phi] = comma_over(fun, phi);
            nerves[phi] = nerve(comma[phi]->cat);
        }
    };
    for (std::size_t lam = 0; lam < fun.tgt->num_morphisms(); ++lam) {
        budget.tick();
        int phi = fun.tgt->morphisms[lam].src;
        int phi2 = fun.tgt->morphisms[lam].tgt;
        at(phi);
        at(phi2);
        Functor induced = comma_post_functor(fun, *comma[phi], *comma[phi2], static_cast<int>(lam));
        SimplicialMap nm = nerve_map(induced, *nerves[phi], *nerves[phi2]);
        InducedMapResult im = induced_homology_map(nm);
        ProxyCheckRow row;
        row.condition = condition_prefix + "morphism=" + fun.tgt->morphisms[lam].id;
        row.objects = {fun.tgt->objects[phi], fun.tgt->objects[phi2]};
        row.pass = im.homology_equivalence;
        row.source_homology = im.source.brief();
        row.target_homology = im.target.brief();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ProxyCheckRow> matching_proxy_rows(const MatchingFunctor& m,
                                               const std::string& condition_prefix, Budget& budget) {
    return proxy_rows_for_functor(m.fun, condition_prefix, budget);
}

ReedyReport reedy_qf_check(const Diagram& x, Budget& budget) {
    degree_function(*x.base);  // NotLeftFinite guard
    ReedyReport rep;
    for (std::size_t i = 0; i < x.base->num_objects(); ++i) {
        MatchingFunctor m = matching_functor(x, static_cast<int>(i), budget);
        auto rows = matching_proxy_rows(m, "i=" + x.base->objects[i] + " ", budget);
        for (auto& row : rows) {
            if (!row.pass) rep.pass = false;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

// ---- Grothendieck construction --------------------------------------------------

int Grothendieck::find_object(int k, int x) const {
    for (std::size_t o = 0; o < object_parts.size(); ++o)
        if (object_parts[o].first == k && object_parts[o].second == x) return static_cast<int>(o);
    return -1;
}

int Grothendieck::find_morphism(int src_obj, int alpha, int delta) const {
    for (std::size_t m = 0; m < morphism_parts.size(); ++m)
        if (morphism_parts[m][0] == src_obj && morphism_parts[m][2] == alpha &&
            morphism_parts[m][3] == delta)
            return static_cast<int>(m);
    return -1;
}

Grothendieck grothendieck(const Diagram& f) {
    Grothendieck out;
    out.input = f;
    const FinCategory& k = *f.base;
    CatBuilder b;
    std::map<std::pair<int, int>, int> obj_at;
    for (std::size_t o = 0; o < k.num_objects(); ++o)
        for (std::size_t x = 0; x < f.vertex[o]->num_objects(); ++x) {
            int idx = b.add_object("(" + k.objects[o] + "," + f.vertex[o]->objects[x] + ")");
            obj_at[{static_cast<int>(o), static_cast<int>(x)}] = idx;
            out.object_parts.emplace_back(static_cast<int>(o), static_cast<int>(x));
        }
    for (std::size_t so = 0; so < out.object_parts.size(); ++so) {
        auto [ko, xo] = out.object_parts[so];
        for (std::size_t alpha = 0; alpha < k.num_morphisms(); ++alpha) {
            if (k.morphisms[alpha].src != ko) continue;
            int l = k.morphisms[alpha].tgt;
            int push = f.transition[alpha].omap[xo];
            const FinCategory& fl = *f.vertex[l];
            for (std::size_t delta = 0; delta < fl.num_morphisms(); ++delta) {
                if (fl.morphisms[delta].src != push) continue;
                int y = fl.morphisms[delta].tgt;
                int to = obj_at.at({l, y});
                b.add_morphism("(" + b.cat.objects[so] + ">" + k.morphisms[alpha].id + "," +
                                   fl.morphisms[delta].id + ">" + b.cat.objects[to] + ")",
                               static_cast<int>(so), to);
                out.morphism_parts.push_back(
                    {static_cast<int>(so), to, static_cast<int>(alpha), static_cast<int>(delta)});
            }
        }
    }
    auto mor_index = [&](int so, int alpha, int delta, int to) {
        const FinCategory& fl = *f.vertex[k.morphisms[alpha].tgt];
        return b.cat.morphism_index("(" + b.cat.objects[so] + ">" + k.morphisms[alpha].id + "," +
                                    fl.morphisms[delta].id + ">" + b.cat.objects[to] + ")");
    };
    for (std::size_t o = 0; o < out.object_parts.size(); ++o) {
        auto [ko, xo] = out.object_parts[o];
        int alpha = k.identity[ko];
        int delta = f.vertex[ko]->identity[f.transition[alpha].omap[xo]];
        b.set_identity(static_cast<int>(o),
                       mor_index(static_cast<int>(o), alpha, delta, static_cast<int>(o)));
    }
    for (std::size_t m2 = 0; m2 < out.morphism_parts.size(); ++m2)
        for (std::size_t m1 = 0; m1 < out.morphism_parts.size(); ++m1) {
            if (out.morphism_parts[m1][1] != out.morphism_parts[m2][0]) continue;
            int alpha = out.morphism_parts[m1][2], delta = out.morphism_parts[m1][3];
            int beta = out.morphism_parts[m2][2], eps = out.morphism_parts[m2][3];
            int ba = k.compose(beta, alpha);
            const FinCategory& target_cat = *f.vertex[k.morphisms[beta].tgt];
            int comp_delta = target_cat.compose(eps, f.transition[beta].mmap[delta]);
            int idx = mor_index(out.morphism_parts[m1][0], ba, comp_delta, out.morphism_parts[m2][1]);
            if (idx < 0) throw PreconditionError("grothendieck: missing composite");
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1), idx);
        }
    out.cat = b.freeze();
    return out;
}

// ---- holim model -------------------------------------------------------------------

HolimModel holim_model(const Diagram& x, Budget& budget) {
    HolimModel out;
    out.over = overcat_diagram(x.base);
    out.hom = hom_category(out.over.diagram, x, budget);
    try {
        out.homology = homology_of(*nerve(out.hom.cat).ss);
        out.nerve_defined = true;
    } catch (const LoopyCategory&) {
        out.nerve_defined = false;
    }
    return out;
}

// ---- Barwick-Kan ----------------------------------------------------------------------

int BarwickKan::find_object(int c, int e, int phi, int psi) const {
    for (std::size_t o = 0; o < object_parts.size(); ++o)
        if (object_parts[o][0] == c && object_parts[o][1] == e && object_parts[o][3] == phi &&
            object_parts[o][4] == psi)
            return static_cast<int>(o);
    return -1;
}

BarwickKan barwick_kan(const Functor& f, const Functor& g) {
    if (!f.tgt->same_data(*g.tgt)) throw PreconditionError("barwick_kan: targets differ");
    const FinCategory& c = *f.src;
    const FinCategory& e = *g.src;
    const FinCategory& d = *f.tgt;
    BarwickKan out;
    CatBuilder b;
    for (std::size_t co = 0; co < c.num_objects(); ++co)
        for (std::size_t eo = 0; eo < e.num_objects(); ++eo)
            for (std::size_t dd = 0; dd < d.num_objects(); ++dd)
                for (std::size_t phi = 0; phi < d.num_morphisms(); ++phi) {
                    if (d.morphisms[phi].src != f.omap[co] ||
                        d.morphisms[phi].tgt != static_cast<int>(dd))
                        continue;
                    for (std::size_t psi = 0; psi < d.num_morphisms(); ++psi) {
                        if (d.morphisms[psi].src != g.omap[eo] ||
                            d.morphisms[psi].tgt != static_cast<int>(dd))
                            continue;
                        b.add_object("(" + c.objects[co] + "," + e.objects[eo] + "," +
                                     d.morphisms[phi].id + "," + d.morphisms[psi].id + ")");
                        out.object_parts.push_back({static_cast<int>(co), static_cast<int>(eo),
                                                    static_cast<int>(dd), static_cast<int>(phi),
                                                    static_cast<int>(psi)});
                    }
                }
    auto mor_id = [&](int so, int u, int w, int v, int to) {
        return "(" + b.cat.objects[so] + ">" + c.morphisms[u].id + "," + e.morphisms[w].id + "," +
               d.morphisms[v].id + ">" + b.cat.objects[to] + ")";
    };
    for (std::size_t so = 0; so < out.object_parts.size(); ++so) {
        auto [co, eo, dd, phi, psi] = out.object_parts[so];
        for (std::size_t to = 0; to < out.object_parts.size(); ++to) {
            auto [co2, eo2, dd2, phi2, psi2] = out.object_parts[to];
            for (std::size_t u = 0; u < c.num_morphisms(); ++u) {
                if (c.morphisms[u].src != co || c.morphisms[u].tgt != co2) continue;
                for (std::size_t w = 0; w < e.num_morphisms(); ++w) {
                    if (e.morphisms[w].src != eo || e.morphisms[w].tgt != eo2) continue;
                    for (std::size_t v = 0; v < d.num_morphisms(); ++v) {
                        if (d.morphisms[v].src != dd || d.morphisms[v].tgt != dd2) continue;
                        if (d.compose(phi2, f.mmap[u]) != d.compose(static_cast<int>(v), phi)) continue;
                        if (d.compose(psi2, g.mmap[w]) != d.compose(static_cast<int>(v), psi)) continue;
                        b.add_morphism(mor_id(static_cast<int>(so), static_cast<int>(u),
                                              static_cast<int>(w), static_cast<int>(v),
                                              static_cast<int>(to)),
                                       static_cast<int>(so), static_cast<int>(to));
                        out.morphism_parts.push_back({static_cast<int>(so), static_cast<int>(to),
                                                      static_cast<int>(u), static_cast<int>(w),
                                                      static_cast<int>(v)});
                    }
                }
            }
        }
    }
    for (std::size_t o = 0; o < out.object_parts.size(); ++o) {
        auto [co, eo, dd, phi, psi] = out.object_parts[o];
        b.set_identity(static_cast<int>(o),
                       b.cat.morphism_index(mor_id(static_cast<int>(o), c.identity[co], e.identity[eo],
                                                   d.identity[dd], static_cast<int>(o))));
    }
    for (std::size_t m2 = 0; m2 < out.morphism_parts.size(); ++m2)
        for (std::size_t m1 = 0; m1 < out.morphism_parts.size(); ++m1) {
            if (out.morphism_parts[m1][1] != out.morphism_parts[m2][0]) continue;
            int u = c.compose(out.morphism_parts[m2][2], out.morphism_parts[m1][2]);
            int w = e.compose(out.morphism_parts[m2][3], out.morphism_parts[m1][3]);
            int v = d.compose(out.morphism_parts[m2][4], out.morphism_parts[m1][4]);
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1),
                          b.cat.morphism_index(
                              mor_id(out.morphism_parts[m1][0], u, w, v, out.morphism_parts[m2][1])));
        }
    out.cat = b.freeze();
    return out;
}

Diagram cospan_diagram(const Functor& f, const Functor& g) {
    if (!f.tgt->same_data(*g.tgt)) throw PreconditionError("cospan_diagram: targets differ");
    auto base = poset_category({"a", "m", "b"}, {{"a", "m"}, {"b", "m"}});
    Diagram out;
    out.base = base;
    out.vertex = {f.src, f.tgt, g.src};
    out.transition.resize(base->num_morphisms());
    for (std::size_t m = 0; m < base->num_morphisms(); ++m) {
        const Morphism& mor = base->morphisms[m];
        if (base->is_identity(static_cast<int>(m)))
            out.transition[m] = identity_functor(out.vertex[mor.src]);
        else if (base->objects[mor.src] == "a")
            out.transition[m] = f;
        else
            out.transition[m] = g;
    }
    return out;
}

BkCoincidence barwick_kan_coincidence(const Functor& f, const Functor& g, Budget& budget) {
    BkCoincidence out;
    const FinCategory& d = *f.tgt;
    Diagram cospan = cospan_diagram(f, g);
    HolimModel model = holim_model(cospan, budget);
    BarwickKan bk = barwick_kan(f, g);

    // Hom((a->m<-b)/(-), cospan) -> f|g: read off c, e, d and the zig-zag from
    // the component functors at the three base objects.
    const CatPtr base = cospan.base;
    int oa = base->object_index("a"), om = base->object_index("m"), ob = base->object_index("b");
    const SliceCategory& sm = model.over.slices[om];
    int leg_a = -1, leg_b = -1, leg_m = -1;
    for (std::size_t s = 0; s < sm.object_mor.size(); ++s) {
        int amb = sm.object_mor[s];
        if (base->is_identity(amb))
            leg_m = static_cast<int>(s);
        else if (base->morphisms[amb].src == oa)
            leg_a = static_cast<int>(s);
        else
            leg_b = static_cast<int>(s);
    }
    // morphisms (leg -> id_m) inside the slice over m
    auto slice_mor = [&](int from, int to, int mediator_ambient) {
        std::string id = "(" + base->morphisms[sm.object_mor[from]].id + ">" +
                         base->morphisms[mediator_ambient].id + ">" +
                         base->morphisms[sm.object_mor[to]].id + ")";
        return sm.cat->morphism_index(id);
    };
    int alpha_m = -1, beta_m = -1;
    for (std::size_t m = 0; m < base->num_morphisms(); ++m) {
        if (base->is_identity(static_cast<int>(m))) continue;
        if (base->morphisms[m].src == oa) alpha_m = slice_mor(leg_a, leg_m, static_cast<int>(m));
        if (base->morphisms[m].src == ob) beta_m = slice_mor(leg_b, leg_m, static_cast<int>(m));
    }

    Functor to_bk;
    to_bk.src = model.hom.cat;
    to_bk.tgt = bk.cat;
    to_bk.omap.resize(model.hom.cat->num_objects());
    for (std::size_t o = 0; o < model.hom.objects.size(); ++o) {
        const DiagramMap& dm = model.hom.objects[o];
        const SliceCategory& sa = model.over.slices[oa];
        const SliceCategory& sb = model.over.slices[ob];
        int c = dm.component[oa].omap[sa.cat->object_index(base->morphisms[base->identity[oa]].id)];
        int e = dm.component[ob].omap[sb.cat->object_index(base->morphisms[base->identity[ob]].id)];
        int phi = dm.component[om].mmap[alpha_m];
        int psi = dm.component[om].mmap[beta_m];
        int idx = bk.find_object(c, e, phi, psi);
        if (idx < 0) throw PreconditionError("coincidence: object image missing");
        to_bk.omap[o] = idx;
    }
    to_bk.mmap.resize(model.hom.cat->num_morphisms());
    for (std::size_t m = 0; m < model.hom.morphisms.size(); ++m) {
        const Modification& mod = model.hom.morphisms[m];
        const SliceCategory& sa = model.over.slices[oa];
        const SliceCategory& sb = model.over.slices[ob];
        int u = mod.component[oa].component[sa.cat->object_index(base->morphisms[base->identity[oa]].id)];
        int w = mod.component[ob].component[sb.cat->object_index(base->morphisms[base->identity[ob]].id)];
        int v = mod.component[om].component[leg_m];
        int so = to_bk.omap[mod.src], to = to_bk.omap[mod.tgt];
        std::string id = "(" + bk.cat->objects[so] + ">" + f.src->morphisms[u].id + "," +
                         g.src->morphisms[w].id + "," + d.morphisms[v].id + ">" +
                         bk.cat->objects[to] + ")";
        int idx = bk.cat->morphism_index(id);
        if (idx < 0) throw PreconditionError("coincidence: morphism image missing");
        to_bk.mmap[m] = idx;
    }
    out.hom_vs_bk = functor_is_isomorphism(to_bk);

    // f|g -> Grothendieck of f/(-) x g/(-) over D
    std::vector<CommaCategory> fd, gd;
    for (std::size_t dd = 0; dd < d.num_objects(); ++dd) {
        fd.push_back(comma_over(f, static_cast<int>(dd)));
        gd.push_back(comma_over(g, static_cast<int>(dd)));
    }
    Diagram fg;
    auto dptr = f.tgt;
    fg.base = dptr;
    std::vector<ProductCategory> prods;
    for (std::size_t dd = 0; dd < d.num_objects(); ++dd) {
        prods.push_back(product_category(fd[dd].cat, gd[dd].cat));
        fg.vertex.push_back(prods.back().cat);
    }
    for (std::size_t v = 0; v < d.num_morphisms(); ++v) {
        const Morphism& mv = d.morphisms[v];
        Functor pf = comma_post_functor(f, fd[mv.src], fd[mv.tgt], static_cast<int>(v));
        Functor pg = comma_post_functor(g, gd[mv.src], gd[mv.tgt], static_cast<int>(v));
        Functor t;
        t.src = prods[mv.src].cat;
        t.tgt = prods[mv.tgt].cat;
        t.omap.resize(t.src->num_objects());
        for (std::size_t o = 0; o < t.src->num_objects(); ++o) {
            auto [i, j] = prods[mv.src].object_factors(static_cast<int>(o));
            t.omap[o] = prods[mv.tgt].object_pair(pf.omap[i], pg.omap[j]);
        }
        t.mmap.resize(t.src->num_morphisms());
        for (std::size_t m = 0; m < t.src->num_morphisms(); ++m) {
            auto [i, j] = prods[mv.src].morphism_factors(static_cast<int>(m));
            t.mmap[m] = prods[mv.tgt].morphism_pair(pf.mmap[i], pg.mmap[j]);
        }
        fg.transition.push_back(std::move(t));
    }
    Grothendieck gr = grothendieck(fg);
    Functor bk_to_gr;
    bk_to_gr.src = bk.cat;
    bk_to_gr.tgt = gr.cat;
    bk_to_gr.omap.resize(bk.cat->num_objects());
    for (std::size_t o = 0; o < bk.object_parts.size(); ++o) {
        auto [c, e, dd, phi, psi] = bk.object_parts[o];
        int fo = fd[dd].find_object(c, phi);
        int go = gd[dd].find_object(e, psi);
        int prod_obj = prods[dd].object_pair(fo, go);
        int idx = gr.find_object(dd, prod_obj);
        if (idx < 0) throw PreconditionError("coincidence: grothendieck object missing");
        bk_to_gr.omap[o] = idx;
    }
    bk_to_gr.mmap.resize(bk.cat->num_morphisms());
    for (std::size_t m = 0; m < bk.morphism_parts.size(); ++m) {
        auto [so, to, u, w, v] = bk.morphism_parts[m];
        auto [c, e, dd, phi, psi] = bk.object_parts[so];
        auto [c2, e2, dd2, phi2, psi2] = bk.object_parts[to];
        // delta in the product fiber at dd2: the pair of comma morphisms given by (u, w)
        int fo2 = fd[dd2].find_object(c2, phi2);
        int go2 = gd[dd2].find_object(e2, psi2);
        // source of delta: push the source pair along v
        int fo_pushed = fd[dd2].find_object(c, d.compose(v, phi));
        int go_pushed = gd[dd2].find_object(e, d.compose(v, psi));
        std::string fid = "(" + fd[dd2].cat->objects[fo_pushed] + ">" + f.src->morphisms[u].id + ">" +
                          fd[dd2].cat->objects[fo2] + ")";
        std::string gid = "(" + gd[dd2].cat->objects[go_pushed] + ">" + g.src->morphisms[w].id + ">" +
                          gd[dd2].cat->objects[go2] + ")";
        int fm = fd[dd2].cat->morphism_index(fid);
        int gm = gd[dd2].cat->morphism_index(gid);
        if (fm < 0 || gm < 0) throw PreconditionError("coincidence: comma morphism missing");
        int delta = prods[dd2].morphism_pair(fm, gm);
        int idx = gr.find_morphism(bk_to_gr.omap[so], v, delta);
        if (idx < 0) throw PreconditionError("coincidence: grothendieck morphism missing");
        bk_to_gr.mmap[m] = idx;
    }
    out.bk_vs_groth = functor_is_isomorphism(bk_to_gr);
    return out;
}

}  // namespace catlim
