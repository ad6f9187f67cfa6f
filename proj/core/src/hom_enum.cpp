#include <functional>

#include "catlim/holim.hpp"

namespace catlim {

std::string DiagramMap::key() const {
    std::string s = "Phi(";
    for (std::size_t i = 0; i < component.size(); ++i) {
        if (i) s += ';';
        s += component[i].key();
    }
    return s + ")";
}

std::string Modification::key() const {
    std::string s = "Mod" + std::to_string(src) + ">" + std::to_string(tgt) + "(";
    for (std::size_t i = 0; i < component.size(); ++i) {
        if (i) s += ';';
        s += component[i].key();
    }
    return s + ")";
}

int HomCategory::find_object(const DiagramMap& m) const {
    auto it = object_by_key.find(m.key());
    return it == object_by_key.end() ? -1 : it->second;
}

int HomCategory::find_morphism(const Modification& m) const {
    auto it = morphism_by_key.find(m.key());
    return it == morphism_by_key.end() ? -1 : it->second;
}

namespace {

// strict naturality X_a o Phi_i = Phi_j o Y_a on one base morphism
bool square_commutes(const Diagram& y, const Diagram& x, int a, const Functor& phi_i,
                     const Functor& phi_j) {
    const Functor& ya = y.transition[a];
    const Functor& xa = x.transition[a];
    for (std::size_t o = 0; o < ya.omap.size(); ++o)
        if (xa.omap[phi_i.omap[o]] != phi_j.omap[ya.omap[o]]) return false;
    for (std::size_t m = 0; m < ya.mmap.size(); ++m)
        if (xa.mmap[phi_i.mmap[m]] != phi_j.mmap[ya.mmap[m]]) return false;
    return true;
}

// whiskering equality X_a * lam_i = lam_j * Y_a on one base morphism
bool whisker_commutes(const Diagram& y, const Diagram& x, int a, const NatTrans& lam_i,
                      const NatTrans& lam_j) {
    const Functor& ya = y.transition[a];
    const Functor& xa = x.transition[a];
    for (std::size_t o = 0; o < ya.omap.size(); ++o)
        if (xa.mmap[lam_i.component[o]] != lam_j.component[ya.omap[o]]) return false;
    return true;
}

}  // namespace

HomCategory hom_category(const Diagram& y, const Diagram& x, Budget& budget) {
    if (!y.base->same_data(*x.base))
        throw PreconditionError("hom_category: diagrams have different bases");
    HomCategory out;
    out.source = y;
    out.target = x;
    const FinCategory& base = *y.base;
    const std::size_t nb = base.num_objects();

    // candidate component functors per base object
    std::vector<std::vector<Functor>> cand(nb);
    for (std::size_t i = 0; i < nb; ++i) cand[i] = all_functors(y.vertex[i], x.vertex[i], budget);

    // base morphisms grouped by the larger endpoint, so each square is checked
    // as soon as both components are chosen
    std::vector<std::vector<int>> due(nb);
    for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
        int last = std::max(base.morphisms[m].src, base.morphisms[m].tgt);
        due[last].push_back(static_cast<int>(m));
    }

    std::vector<Functor> chosen(nb);
    std::function<void(std::size_t)> rec_obj = [&](std::size_t i) {
        budget.tick();
        if (i == nb) {
            DiagramMap dm;
            dm.component = chosen;
            out.object_by_key[dm.key()] = static_cast<int>(out.objects.size());
            out.objects.push_back(std::move(dm));
            return;
        }
        for (const Functor& f : cand[i]) {
            chosen[i] = f;
            bool ok = true;
            for (int m : due[i]) {
                const Morphism& mor = base.morphisms[m];
                if (!square_commutes(y, x, m, chosen[mor.src], chosen[mor.tgt])) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec_obj(i + 1);
        }
    };
    if (nb == 0) {
        DiagramMap dm;
        out.object_by_key[dm.key()] = 0;
        out.objects.push_back(std::move(dm));
    } else {
        rec_obj(0);
    }

    // morphisms: modifications for every ordered object pair
    CatBuilder b;
    for (const auto& o : out.objects) b.add_object(o.key());

    std::map<std::pair<std::string, std::string>, std::vector<NatTrans>> nt_cache;
    auto nat_candidates = [&](std::size_t i, const Functor& f, const Functor& g)
        -> const std::vector<NatTrans>& {
        auto key = std::make_pair(std::to_string(i) + ":" + f.key(), g.key());
        auto it = nt_cache.find(key);
        if (it != nt_cache.end()) return it->second;
        auto r = nt_cache.emplace(key, all_nat_trans(f, g, budget));
        return r.first->second;
    };

    for (std::size_t a = 0; a < out.objects.size(); ++a)
        for (std::size_t c = 0; c < out.objects.size(); ++c) {
            std::vector<NatTrans> comp(nb);
            std::function<void(std::size_t)> rec_mor = [&](std::size_t i) {
                budget.tick();
                if (i == nb) {
                    Modification mod;
                    mod.src = static_cast<int>(a);
                    mod.tgt = static_cast<int>(c);
                    mod.component = comp;
                    int idx = b.add_morphism(mod.key(), static_cast<int>(a), static_cast<int>(c));
                    out.morphism_by_key[mod.key()] = idx;
                    out.morphisms.push_back(std::move(mod));
                    return;
                }
                for (const NatTrans& nt :
                     nat_candidates(i, out.objects[a].component[i], out.objects[c].component[i])) {
                    comp[i] = nt;
                    bool ok = true;
                    for (int m : due[i]) {
                        const Morphism& mor = base.morphisms[m];
                        if (!whisker_commutes(y, x, m, comp[mor.src], comp[mor.tgt])) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) rec_mor(i + 1);
                }
            };
            rec_mor(0);
        }

    // identities and composition componentwise
    for (std::size_t o = 0; o < out.objects.size(); ++o) {
        Modification ident;
        ident.src = ident.tgt = static_cast<int>(o);
        for (std::size_t i = 0; i < nb; ++i)
            ident.component.push_back(identity_nat_trans(out.objects[o].component[i]));
        int idx = out.find_morphism(ident);
        if (idx < 0) throw PreconditionError("hom_category: identity modification missing");
        b.set_identity(static_cast<int>(o), idx);
    }
    for (std::size_t m2 = 0; m2 < out.morphisms.size(); ++m2)
        for (std::size_t m1 = 0; m1 < out.morphisms.size(); ++m1) {
            if (out.morphisms[m1].tgt != out.morphisms[m2].src) continue;
            Modification comp;
            comp.src = out.morphisms[m1].src;
            comp.tgt = out.morphisms[m2].tgt;
            for (std::size_t i = 0; i < nb; ++i)
                comp.component.push_back(
                    compose_nat_trans(out.morphisms[m2].component[i], out.morphisms[m1].component[i]));
            int idx = out.find_morphism(comp);
            if (idx < 0) throw PreconditionError("hom_category: composite modification missing");
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1), idx);
        }
    out.cat = b.freeze();
    return out;
}

}  // namespace catlim
