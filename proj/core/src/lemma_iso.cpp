#include <functional>

#include "catlim/holim.hpp"

namespace catlim {

namespace {

Functor nary_product_functor(const NaryProductCategory& src, const NaryProductCategory& tgt,
                             const std::vector<Functor>& comps) {
    Functor out;
    out.src = src.cat;
    out.tgt = tgt.cat;
    out.omap.resize(src.cat->num_objects());
    for (std::size_t o = 0; o < src.cat->num_objects(); ++o) {
        std::vector<int> t = src.object_factors(static_cast<int>(o));
        for (std::size_t p = 0; p < t.size(); ++p) t[p] = comps[p].omap[t[p]];
        out.omap[o] = tgt.object_tuple(t);
    }
    out.mmap.resize(src.cat->num_morphisms());
    for (std::size_t m = 0; m < src.cat->num_morphisms(); ++m) {
        std::vector<int> t = src.morphism_factors(static_cast<int>(m));
        for (std::size_t p = 0; p < t.size(); ++p) t[p] = comps[p].mmap[t[p]];
        out.mmap[m] = tgt.morphism_tuple(t);
    }
    return out;
}

}  // namespace

FUData f_u_functor(const Diagram& x, const std::vector<int>& u_objs, Budget& budget) {
    FUData out;
    out.u_objs = u_objs;
    out.uu = union_under(x.base, u_objs);
    OvercatDiagram over_lt = overcat_diagram(out.uu.lt.cat);
    Diagram x_lt = restrict_diagram(x, out.uu.lt.projection);
    out.hom_lt = hom_category(over_lt.diagram, x_lt, budget);

    for (int u : u_objs) out.matching.push_back(matching_functor(x, u, budget));

    // the objects of U<I with source u correspond to the objects of u<I, with
    // identical ids and in the same relative order
    const std::size_t nu = u_objs.size();
    std::vector<std::vector<int>> lt_index_of(nu);  // per u: strict object -> U<I object
    for (std::size_t p = 0; p < nu; ++p) {
        const FinCategory& sc = *out.matching[p].strict.cat;
        for (std::size_t a = 0; a < sc.num_objects(); ++a) {
            int idx = out.uu.lt.cat->object_index(sc.objects[a]);
            if (idx < 0) throw PreconditionError("f_u_functor: component object missing in U<I");
            lt_index_of[p].push_back(idx);
        }
    }

    // restriction functors Hom((U<I)/(-), X_{U<}) -> Hom((u<I)/(-), X_{u<})
    out.restrict_obj.resize(nu);
    out.restrict_mor.resize(nu);
    for (std::size_t p = 0; p < nu; ++p) {
        const MatchingFunctor& mu = out.matching[p];
        for (std::size_t phi = 0; phi < out.hom_lt.objects.size(); ++phi) {
            DiagramMap dm;
            for (std::size_t a = 0; a < mu.strict.cat->num_objects(); ++a) {
                int la = lt_index_of[p][a];
                dm.component.push_back(rebase_functor(out.hom_lt.objects[phi].component[la],
                                                      mu.over.slices[a].cat,
                                                      mu.restricted.vertex[a]));
            }
            int idx = mu.hom.find_object(dm);
            if (idx < 0) throw PreconditionError("f_u_functor: restricted family not found");
            out.restrict_obj[p].push_back(idx);
        }
        for (std::size_t lam = 0; lam < out.hom_lt.morphisms.size(); ++lam) {
            const Modification& mod = out.hom_lt.morphisms[lam];
            Modification r;
            r.src = out.restrict_obj[p][mod.src];
            r.tgt = out.restrict_obj[p][mod.tgt];
            for (std::size_t a = 0; a < mu.strict.cat->num_objects(); ++a) {
                int la = lt_index_of[p][a];
                NatTrans nt;
                nt.source = mu.hom.objects[r.src].component[a];
                nt.target = mu.hom.objects[r.tgt].component[a];
                nt.component = mod.component[la].component;
                r.component.push_back(std::move(nt));
            }
            int idx = mu.hom.find_morphism(r);
            if (idx < 0) throw PreconditionError("f_u_functor: restricted modification not found");
            out.restrict_mor[p].push_back(idx);
        }
    }

    // vertex categories: products of the comma categories m_u / (Phi|_u)
    out.comma.resize(out.hom_lt.objects.size());
    for (std::size_t phi = 0; phi < out.hom_lt.objects.size(); ++phi) {
        std::vector<CatPtr> factors;
        for (std::size_t p = 0; p < nu; ++p) {
            out.comma[phi].push_back(comma_over(out.matching[p].fun, out.restrict_obj[p][phi]));
            factors.push_back(out.comma[phi].back().cat);
        }
        out.product.push_back(nary_product_category(factors));
    }

    out.diagram.base = out.hom_lt.cat;
    for (std::size_t phi = 0; phi < out.hom_lt.objects.size(); ++phi)
        out.diagram.vertex.push_back(out.product[phi].cat);
    for (std::size_t lam = 0; lam < out.hom_lt.morphisms.size(); ++lam) {
        int sphi = out.hom_lt.morphisms[lam].src;
        int tphi = out.hom_lt.morphisms[lam].tgt;
        std::vector<Functor> comps;
        for (std::size_t p = 0; p < nu; ++p)
            comps.push_back(comma_post_functor(out.matching[p].fun, out.comma[sphi][p],
                                               out.comma[tphi][p], out.restrict_mor[p][lam]));
        out.diagram.transition.push_back(
            nary_product_functor(out.product[sphi], out.product[tphi], comps));
    }
    return out;
}

LemmaIso lemma_indgrot_iso(const Diagram& x, const std::vector<int>& u_objs, Budget& budget) {
    LemmaIso out;
    out.fu = f_u_functor(x, u_objs, budget);
    const FUData& fu = out.fu;
    const CatPtr& base = x.base;

    OvercatDiagram over_le = overcat_diagram(fu.uu.le.cat);
    Diagram x_le = restrict_diagram(x, fu.uu.le.projection);
    out.hom_le = hom_category(over_le.diagram, x_le, budget);
    out.groth = grothendieck(fu.diagram);

    const std::size_t nu = u_objs.size();
    std::vector<int> pos_of_u(base->num_objects(), -1);
    for (std::size_t p = 0; p < nu; ++p) pos_of_u[u_objs[p]] = static_cast<int>(p);

    // per le-object: ambient morphism, component position, whether identity leg
    const FinCategory& le = *fu.uu.le.cat;
    std::vector<int> amb(le.num_objects());       // ambient morphism alpha
    std::vector<int> upos(le.num_objects());      // position of src(alpha) in U
    std::vector<int> strict_a(le.num_objects());  // object index of alpha in u<I, or -1 for id legs
    for (std::size_t la = 0; la < le.num_objects(); ++la) {
        amb[la] = fu.uu.le.object_mor[la];
        int u = base->morphisms[amb[la]].src;
        upos[la] = pos_of_u[u];
        strict_a[la] = base->is_identity(amb[la])
                           ? -1
                           : fu.matching[upos[la]].strict.cat->object_index(base->morphisms[amb[la]].id);
    }

    // ---- Theta : Grothendieck -> Hom((U<=I)/(-), X_{U<=}) ----

    // slice bookkeeping for the le side
    // each slice object is a (beta > delta) factorization; beta is read off the
    // slice's own ambient morphism (a morphism of U<=I)
    auto le_slice_parts = [&](std::size_t la, int slice_obj, int& beta_obj, int& beta_amb) {
        const SliceCategory& sl = over_le.slices[la];
        int lemor = sl.object_mor[slice_obj];          // morphism of U<=I into la
        beta_obj = le.morphisms[lemor].src;            // object of U<=I
        beta_amb = fu.uu.le.object_mor[beta_obj];      // ambient morphism beta
    };

    auto assemble_psi = [&](int phi_idx, const std::vector<int>& comma_obj) -> DiagramMap {
        // comma_obj[p] = object of m_u/(Phi|_u)
        DiagramMap psi;
        for (std::size_t la = 0; la < le.num_objects(); ++la) {
            const SliceCategory& sl = over_le.slices[la];
            int p = upos[la];
            const CommaCategory& cm = fu.comma[phi_idx][p];
            int x_u = cm.object_a[comma_obj[p]];
            int psi_u = cm.object_phi[comma_obj[p]];  // morphism of H_u
            const MatchingFunctor& mu = fu.matching[p];
            const Modification& gamma = mu.hom.morphisms[psi_u];
            Functor comp;
            comp.src = sl.cat;
            comp.tgt = x_le.vertex[la];
            comp.omap.resize(sl.cat->num_objects());
            comp.mmap.resize(sl.cat->num_morphisms());
            for (std::size_t so = 0; so < sl.cat->num_objects(); ++so) {
                int beta_obj, beta_amb;
                le_slice_parts(la, static_cast<int>(so), beta_obj, beta_amb);
                if (base->is_identity(beta_amb)) {
                    comp.omap[so] = x.transition[amb[la]].omap[x_u];
                } else {
                    const Functor& phi_a = fu.hom_lt.objects[phi_idx]
                                               .component[fu.uu.lt.cat->object_index(
                                                   base->morphisms[amb[la]].id)];
                    // same-id object inside the U<I slice of alpha
                    int lt_so = phi_a.src->object_index(sl.cat->objects[so]);
                    if (lt_so < 0) throw PreconditionError("theta: slice object missing");
                    comp.omap[so] = phi_a.omap[lt_so];
                }
            }
            for (std::size_t sm = 0; sm < sl.cat->num_morphisms(); ++sm) {
                int so = sl.cat->morphisms[sm].src;
                int to = sl.cat->morphisms[sm].tgt;
                int beta1_obj, beta1_amb, beta2_obj, beta2_amb;
                le_slice_parts(la, so, beta1_obj, beta1_amb);
                le_slice_parts(la, to, beta2_obj, beta2_amb);
                const FinCategory& xi = *x_le.vertex[la];
                if (base->is_identity(beta2_amb)) {
                    if (!base->is_identity(beta1_amb))
                        throw PreconditionError("theta: non-identity below an identity leg");
                    comp.mmap[sm] = xi.identity[comp.omap[so]];
                } else if (base->is_identity(beta1_amb)) {
                    // gamma_alpha component at the target slice object
                    int a_strict = strict_a[la];
                    const NatTrans& g = gamma.component[a_strict];
                    int lt_to = g.source.src->object_index(sl.cat->objects[to]);
                    if (lt_to < 0) throw PreconditionError("theta: gamma object missing");
                    comp.mmap[sm] = g.component[lt_to];
                } else {
                    const Functor& phi_a = fu.hom_lt.objects[phi_idx]
                                               .component[fu.uu.lt.cat->object_index(
                                                   base->morphisms[amb[la]].id)];
                    int lt_sm = phi_a.src->morphism_index(sl.cat->morphisms[sm].id);
                    if (lt_sm < 0) throw PreconditionError("theta: slice morphism missing");
                    comp.mmap[sm] = phi_a.mmap[lt_sm];
                }
            }
            psi.component.push_back(std::move(comp));
        }
        return psi;
    };

    out.theta.src = out.groth.cat;
    out.theta.tgt = out.hom_le.cat;
    out.theta.omap.resize(out.groth.cat->num_objects());
    for (std::size_t go = 0; go < out.groth.object_parts.size(); ++go) {
        auto [phi_idx, prod_obj] = out.groth.object_parts[go];
        std::vector<int> comma_obj = fu.product[phi_idx].object_factors(prod_obj);
        DiagramMap psi = assemble_psi(phi_idx, comma_obj);
        int idx = out.hom_le.find_object(psi);
        if (idx < 0) throw PreconditionError("theta: assembled family not found");
        out.theta.omap[go] = idx;
    }

    out.theta.mmap.resize(out.groth.cat->num_morphisms());
    for (std::size_t gm = 0; gm < out.groth.morphism_parts.size(); ++gm) {
        auto [src_obj, tgt_obj, lam, zeta] = out.groth.morphism_parts[gm];
        int sphi = out.groth.object_parts[src_obj].first;
        int tphi = out.groth.object_parts[tgt_obj].first;
        const Modification& lammod = fu.hom_lt.morphisms[lam];
        std::vector<int> zeta_parts = fu.product[tphi].morphism_factors(zeta);
        // per u: the X_u morphism carried by the comma morphism
        std::vector<int> f_u(nu);
        for (std::size_t p = 0; p < nu; ++p)
            f_u[p] = fu.comma[tphi][p].projection.mmap[zeta_parts[p]];
        Modification mu_mod;
        mu_mod.src = out.theta.omap[src_obj];
        mu_mod.tgt = out.theta.omap[tgt_obj];
        for (std::size_t la = 0; la < le.num_objects(); ++la) {
            const SliceCategory& sl = over_le.slices[la];
            int p = upos[la];
            NatTrans nt;
            nt.source = out.hom_le.objects[mu_mod.src].component[la];
            nt.target = out.hom_le.objects[mu_mod.tgt].component[la];
            nt.component.resize(sl.cat->num_objects());
            for (std::size_t so = 0; so < sl.cat->num_objects(); ++so) {
                int beta_obj, beta_amb;
                le_slice_parts(la, static_cast<int>(so), beta_obj, beta_amb);
                if (base->is_identity(beta_amb)) {
                    nt.component[so] = x.transition[amb[la]].mmap[f_u[p]];
                } else {
                    const NatTrans& lam_a =
                        lammod.component[fu.uu.lt.cat->object_index(base->morphisms[amb[la]].id)];
                    int lt_so = lam_a.source.src->object_index(sl.cat->objects[so]);
                    if (lt_so < 0) throw PreconditionError("theta: modification object missing");
                    nt.component[so] = lam_a.component[lt_so];
                }
            }
            mu_mod.component.push_back(std::move(nt));
        }
        int idx = out.hom_le.find_morphism(mu_mod);
        if (idx < 0) throw PreconditionError("theta: assembled modification not found");
        out.theta.mmap[gm] = idx;
    }

    // ---- Theta^{-1} : Hom((U<=I)/(-), X_{U<=}) -> Grothendieck ----

    // identity-leg object of U<=I per u, and the single object of its slice
    std::vector<int> id_leg(nu, -1);
    for (std::size_t la = 0; la < le.num_objects(); ++la)
        if (base->is_identity(amb[la])) id_leg[upos[la]] = static_cast<int>(la);

    // inside the slice over alpha: the canonical object (id_u > alpha) and the
    // unique slice morphism (id_u > alpha) -> (beta > delta)
    auto id_leg_slice_obj = [&](std::size_t la) {
        const SliceCategory& sl = over_le.slices[la];
        int u = base->morphisms[amb[la]].src;
        std::string id = "(" + base->morphisms[base->identity[u]].id + ">" +
                         base->morphisms[amb[la]].id + ")";
        int o = sl.cat->object_index(id);
        if (o < 0) throw PreconditionError("theta_inv: identity leg missing");
        return o;
    };

    auto restrict_to_lt = [&](const DiagramMap& psi) -> int {
        DiagramMap phi;
        for (std::size_t a = 0; a < fu.uu.lt.cat->num_objects(); ++a) {
            int la = fu.uu.le.cat->object_index(fu.uu.lt.cat->objects[a]);
            const Functor& psi_a = psi.component[la];
            // the U<I slice embeds into the U<=I slice with the same ids
            OvercatDiagram* dummy = nullptr;
            (void)dummy;
            const CatPtr lt_slice = fu.hom_lt.source.vertex[a];
            Functor comp;
            comp.src = lt_slice;
            comp.tgt = fu.hom_lt.target.vertex[a];
            comp.omap.resize(lt_slice->num_objects());
            comp.mmap.resize(lt_slice->num_morphisms());
            for (std::size_t so = 0; so < lt_slice->num_objects(); ++so) {
                int le_so = psi_a.src->object_index(lt_slice->objects[so]);
                if (le_so < 0) throw PreconditionError("theta_inv: slice object missing");
                comp.omap[so] = psi_a.omap[le_so];
            }
            for (std::size_t sm = 0; sm < lt_slice->num_morphisms(); ++sm) {
                int le_sm = psi_a.src->morphism_index(lt_slice->morphisms[sm].id);
                if (le_sm < 0) throw PreconditionError("theta_inv: slice morphism missing");
                comp.mmap[sm] = psi_a.mmap[le_sm];
            }
            phi.component.push_back(std::move(comp));
        }
        int idx = fu.hom_lt.find_object(phi);
        if (idx < 0) throw PreconditionError("theta_inv: restriction not found");
        return idx;
    };

    out.theta_inv.src = out.hom_le.cat;
    out.theta_inv.tgt = out.groth.cat;
    out.theta_inv.omap.resize(out.hom_le.cat->num_objects());
    for (std::size_t ao = 0; ao < out.hom_le.objects.size(); ++ao) {
        const DiagramMap& psi = out.hom_le.objects[ao];
        int phi_idx = restrict_to_lt(psi);
        std::vector<int> comma_obj(nu);
        for (std::size_t p = 0; p < nu; ++p) {
            int la_id = id_leg[p];
            int x_u = psi.component[la_id].omap[id_leg_slice_obj(la_id)];
            // gamma: for each alpha in u<I, the natural transformation
            // const_{alpha_* x_u} => Phi_alpha picked out by Psi_alpha
            const MatchingFunctor& mu = fu.matching[p];
            Modification gamma;
            gamma.src = mu.fun.omap[x_u];
            gamma.tgt = fu.restrict_obj[p][phi_idx];
            for (std::size_t a = 0; a < mu.strict.cat->num_objects(); ++a) {
                int la = fu.uu.le.cat->object_index(mu.strict.cat->objects[a]);
                const SliceCategory& sl = over_le.slices[la];
                const Functor& psi_a = psi.component[la];
                NatTrans nt;
                nt.source = mu.hom.objects[gamma.src].component[a];
                nt.target = mu.hom.objects[gamma.tgt].component[a];
                nt.component.resize(mu.over.slices[a].cat->num_objects());
                int from = id_leg_slice_obj(la);
                for (std::size_t so = 0; so < mu.over.slices[a].cat->num_objects(); ++so) {
                    // unique slice morphism (id_u > alpha) -> (beta > delta)
                    int to = sl.cat->object_index(mu.over.slices[a].cat->objects[so]);
                    if (to < 0) throw PreconditionError("theta_inv: gamma target missing");
                    int beta_obj, beta_amb;
                    le_slice_parts(la, to, beta_obj, beta_amb);
                    int u_obj = base->morphisms[amb[la]].src;
                    std::string w = "(" + base->morphisms[base->identity[u_obj]].id + ">" +
                                    base->morphisms[beta_amb].id + ")";
                    std::string morid = "(" + sl.cat->objects[from] + ">" + w + ">" +
                                        sl.cat->objects[to] + ")";
                    int sm = sl.cat->morphism_index(morid);
                    if (sm < 0) throw PreconditionError("theta_inv: canonical slice morphism missing");
                    nt.component[so] = psi_a.mmap[sm];
                }
                gamma.component.push_back(std::move(nt));
            }
            int gidx = mu.hom.find_morphism(gamma);
            if (gidx < 0) throw PreconditionError("theta_inv: gamma not found");
            int cidx = fu.comma[phi_idx][p].find_object(x_u, gidx);
            if (cidx < 0) throw PreconditionError("theta_inv: comma object not found");
            comma_obj[p] = cidx;
        }
        int go = out.groth.find_object(phi_idx, fu.product[phi_idx].object_tuple(comma_obj));
        if (go < 0) throw PreconditionError("theta_inv: grothendieck object not found");
        out.theta_inv.omap[ao] = go;
    }

    out.theta_inv.mmap.resize(out.hom_le.cat->num_morphisms());
    for (std::size_t am = 0; am < out.hom_le.morphisms.size(); ++am) {
        const Modification& mu_mod = out.hom_le.morphisms[am];
        int src_go = out.theta_inv.omap[mu_mod.src];
        int tgt_go = out.theta_inv.omap[mu_mod.tgt];
        auto [sphi, sprod] = out.groth.object_parts[src_go];
        auto [tphi, tprod] = out.groth.object_parts[tgt_go];
        // Lambda: restrict the modification to the non-identity legs
        Modification lam;
        lam.src = sphi;
        lam.tgt = tphi;
        for (std::size_t a = 0; a < fu.uu.lt.cat->num_objects(); ++a) {
            int la = fu.uu.le.cat->object_index(fu.uu.lt.cat->objects[a]);
            const CatPtr lt_slice = fu.hom_lt.source.vertex[a];
            NatTrans nt;
            nt.source = fu.hom_lt.objects[sphi].component[a];
            nt.target = fu.hom_lt.objects[tphi].component[a];
            nt.component.resize(lt_slice->num_objects());
            for (std::size_t so = 0; so < lt_slice->num_objects(); ++so) {
                int le_so = over_le.slices[la].cat->object_index(lt_slice->objects[so]);
                nt.component[so] = mu_mod.component[la].component[le_so];
            }
            lam.component.push_back(std::move(nt));
        }
        int lam_idx = fu.hom_lt.find_morphism(lam);
        if (lam_idx < 0) throw PreconditionError("theta_inv: restricted modification missing");
        // zeta: per u the comma morphism with mediator f_u
        std::vector<int> zeta_parts(nu);
        std::vector<int> scomma = fu.product[sphi].object_factors(sprod);
        std::vector<int> tcomma = fu.product[tphi].object_factors(tprod);
        for (std::size_t p = 0; p < nu; ++p) {
            int la_id = id_leg[p];
            int f_u = mu_mod.component[la_id].component[id_leg_slice_obj(la_id)];
            const CommaCategory& ct = fu.comma[tphi][p];
            const MatchingFunctor& muf = fu.matching[p];
            // pushed source object: (x_u, Lambda|_u o gamma_u)
            int x_u = fu.comma[sphi][p].object_a[scomma[p]];
            int gamma_u = fu.comma[sphi][p].object_phi[scomma[p]];
            int pushed_phi = muf.hom.cat->compose(fu.restrict_mor[p][lam_idx], gamma_u);
            int pushed = ct.find_object(x_u, pushed_phi);
            if (pushed < 0) throw PreconditionError("theta_inv: pushed comma object missing");
            std::string morid = "(" + ct.cat->objects[pushed] + ">" +
                                x.vertex[u_objs[p]]->morphisms[f_u].id + ">" +
                                ct.cat->objects[tcomma[p]] + ")";
            int cm = ct.cat->morphism_index(morid);
            if (cm < 0) throw PreconditionError("theta_inv: comma morphism missing");
            zeta_parts[p] = cm;
        }
        int zeta = fu.product[tphi].morphism_tuple(zeta_parts);
        int gm = out.groth.find_morphism(src_go, lam_idx, zeta);
        if (gm < 0) throw PreconditionError("theta_inv: grothendieck morphism not found");
        out.theta_inv.mmap[am] = gm;
    }

    Functor rt1 = compose_functors(out.theta_inv, out.theta);
    Functor rt2 = compose_functors(out.theta, out.theta_inv);
    out.roundtrip_identity = functor_equal(rt1, identity_functor(out.groth.cat)) &&
                             functor_equal(rt2, identity_functor(out.hom_le.cat)) &&
                             check_functor(out.theta).clean() && check_functor(out.theta_inv).clean();
    return out;
}

}  // namespace catlim
