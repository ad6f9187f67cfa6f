#include <functional>
#include <set>

#include "catlim/lydakis.hpp"

namespace catlim {

namespace {
CatPtr chain_poset(int n) {
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i <= n; ++i) elems.push_back(std::to_string(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) pairs.emplace_back(elems[i], elems[j]);
    return poset_category(elems, pairs);
}
}  // namespace

LydakisMachine::LydakisMachine(const HomCategory& hom, Budget& budget) : hom_(&hom) {
    (void)budget;
    const Diagram& y = hom.source;
    const Diagram& x = hom.target;
    for (std::size_t i = 0; i < y.base->num_objects(); ++i) {
        ny_.push_back(nerve(y.vertex[i]));
        nx_.push_back(nerve(x.vertex[i]));
    }
}

const NerveResult& LydakisMachine::delta_nerve(int n) {
    auto it = delta_.find(n);
    if (it != delta_.end()) return it->second;
    return delta_.emplace(n, nerve(chain_poset(n))).first->second;
}

SSPtr LydakisMachine::delta(int n) { return delta_nerve(n).ss; }

const ProductSS& LydakisMachine::prod(int n, int i) {
    auto it = prod_.find(n);
    if (it == prod_.end()) {
        std::vector<ProductSS> ps;
        for (std::size_t j = 0; j < ny_.size(); ++j)
            ps.push_back(simplicial_product(ny_[j].ss, delta(n)));
        it = prod_.emplace(n, std::move(ps)).first;
    }
    return it->second[i];
}

LydakisMachine::Walk LydakisMachine::expand(const NerveResult& nv, const SimplicialValue& v) const {
    Walk w;
    const FinCategory& c = *nv.category;
    const int q = v.dim();
    std::vector<int> verts;
    std::vector<int> mors;
    if (v.ref.dim == 0) {
        verts = {nv.chains[0][v.ref.idx][0]};
    } else {
        const auto& chain = nv.chains[v.ref.dim][v.ref.idx];
        verts.push_back(c.morphisms[chain[0]].src);
        for (int m : chain) {
            verts.push_back(c.morphisms[m].tgt);
            mors.push_back(m);
        }
    }
    for (int t = 0; t <= q; ++t) w.vertices.push_back(verts[v.eta[t]]);
    for (int t = 1; t <= q; ++t)
        w.morphisms.push_back(v.eta[t] == v.eta[t - 1] ? c.identity[w.vertices[t]]
                                                       : mors[v.eta[t] - 1]);
    return w;
}

std::vector<SimplicialMap> LydakisMachine::family_of_chain(int n, int start_obj,
                                                           const std::vector<int>& chain) {
    const HomCategory& hom = *hom_;
    const FinCategory& hc = *hom.cat;
    std::vector<int> objs{start_obj};
    for (int m : chain) objs.push_back(hc.morphisms[m].tgt);
    const NerveResult& dn = delta_nerve(n);
    const std::size_t nb = ny_.size();
    std::vector<SimplicialMap> fam;
    for (std::size_t i = 0; i < nb; ++i) {
        const ProductSS& pr = prod(n, static_cast<int>(i));
        const FinCategory& xi = *hom.target.vertex[i];
        SimplicialMap f;
        f.source = pr.ss;
        f.target = nx_[i].ss;
        f.image.resize(pr.ss->dim() + 1);
        // composite modification component at an object, between chain stages
        auto climb = [&](int from, int to, int y_obj) {
            int cur = xi.identity[hom.objects[objs[from]].component[i].omap[y_obj]];
            for (int t = from + 1; t <= to; ++t) {
                int comp = hom.morphisms[chain[t - 1]].component[i].component[y_obj];
                cur = xi.compose(comp, cur);
            }
            return cur;
        };
        for (int q = 0; q <= pr.ss->dim(); ++q)
            for (int s = 0; s < pr.ss->count(q); ++s) {
                const auto& [v1, v2] = pr.parts[q][s];
                Walk wy = expand(ny_[i], v1);
                Walk wd = expand(dn, v2);
                if (q == 0) {
                    int obj = hom.objects[objs[wd.vertices[0]]].component[i].omap[wy.vertices[0]];
                    f.image[q].push_back(nx_[i].ss->value_of({0, obj}));
                    continue;
                }
                std::vector<int> img;
                for (int t = 1; t <= q; ++t) {
                    int stage_prev = wd.vertices[t - 1];
                    int stage = wd.vertices[t];
                    int moved = hom.objects[objs[stage_prev]].component[i].mmap[wy.morphisms[t - 1]];
                    int lifted = climb(stage_prev, stage, wy.vertices[t]);
                    img.push_back(xi.compose(lifted, moved));
                }
                f.image[q].push_back(nx_[i].value_of_chain(img, false));
            }
        fam.push_back(std::move(f));
    }
    return fam;
}

bool LydakisMachine::family_natural(int n, const std::vector<SimplicialMap>& fam) {
    const Diagram& y = hom_->source;
    const Diagram& x = hom_->target;
    const FinCategory& base = *y.base;
    for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
        int i = base.morphisms[m].src, j = base.morphisms[m].tgt;
        SimplicialMap ya = nerve_map(y.transition[m], ny_[i], ny_[j]);
        SimplicialMap xa = nerve_map(x.transition[m], nx_[i], nx_[j]);
        SimplicialMap ya_prod =
            product_map(ya, identity_simplicial_map(delta(n)), prod(n, i), prod(n, j));
        SimplicialMap lhs = compose_simplicial_maps(xa, fam[i]);
        SimplicialMap rhs = compose_simplicial_maps(fam[j], ya_prod);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::vector<std::vector<SimplicialMap>> LydakisMachine::natural_families(int n, Budget& budget) {
    const Diagram& y = hom_->source;
    const Diagram& x = hom_->target;
    const FinCategory& base = *y.base;
    const std::size_t nb = base.num_objects();
    std::vector<std::vector<SimplicialMap>> cand(nb);
    for (std::size_t i = 0; i < nb; ++i)
        cand[i] = enumerate_simplicial_maps(prod(n, static_cast<int>(i)).ss, nx_[i].ss, budget);

    struct Cmp {
        int i, j;
        SimplicialMap xa;       // N X_a
        SimplicialMap ya_prod;  // N Y_a x id
    };
    std::vector<Cmp> cmps;
    for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
        Cmp c;
        c.i = base.morphisms[m].src;
        c.j = base.morphisms[m].tgt;
        c.xa = nerve_map(x.transition[m], nx_[c.i], nx_[c.j]);
        c.ya_prod = product_map(nerve_map(y.transition[m], ny_[c.i], ny_[c.j]),
                                identity_simplicial_map(delta(n)), prod(n, c.i), prod(n, c.j));
        cmps.push_back(std::move(c));
    }
    std::vector<std::vector<int>> due(nb);
    for (std::size_t m = 0; m < cmps.size(); ++m)
        due[std::max(cmps[m].i, cmps[m].j)].push_back(static_cast<int>(m));

    std::vector<std::vector<SimplicialMap>> out;
    std::vector<const SimplicialMap*> chosen(nb, nullptr);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        budget.tick();
        if (i == nb) {
            std::vector<SimplicialMap> fam;
            for (auto* p : chosen) fam.push_back(*p);
            out.push_back(std::move(fam));
            return;
        }
        for (const SimplicialMap& f : cand[i]) {
            chosen[i] = &f;
            bool ok = true;
            for (int mi : due[i]) {
                const Cmp& c = cmps[mi];
                SimplicialMap lhs = compose_simplicial_maps(c.xa, *chosen[c.i]);
                SimplicialMap rhs = compose_simplicial_maps(*chosen[c.j], c.ya_prod);
                if (!(lhs == rhs)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(i + 1);
        }
        chosen[i] = nullptr;
    };
    if (nb == 0)
        out.push_back({});
    else
        rec(0);
    return out;
}

std::vector<SimplicialMap> LydakisMachine::family_face(int n, const std::vector<SimplicialMap>& fam,
                                                       int k) {
    const NerveResult& rn = delta_nerve(n);
    const NerveResult& rn1 = delta_nerve(n - 1);
    Functor skip;
    skip.src = rn1.category;
    skip.tgt = rn.category;
    skip.omap.resize(rn1.category->num_objects());
    for (std::size_t o = 0; o < rn1.category->num_objects(); ++o) {
        int v = std::stoi(rn1.category->objects[o]);
        int w = v < k ? v : v + 1;
        skip.omap[o] = rn.category->object_index(std::to_string(w));
    }
    skip.mmap.resize(rn1.category->num_morphisms());
    for (std::size_t m = 0; m < rn1.category->num_morphisms(); ++m) {
        const Morphism& mor = rn1.category->morphisms[m];
        skip.mmap[m] = rn.category->morphism_index(rn.category->objects[skip.omap[mor.src]] + "<=" +
                                                   rn.category->objects[skip.omap[mor.tgt]]);
    }
    SimplicialMap dmap = nerve_map(skip, rn1, rn);
    std::vector<SimplicialMap> out;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        SimplicialMap incl = product_map(identity_simplicial_map(ny_[i].ss), dmap,
                                         prod(n - 1, static_cast<int>(i)), prod(n, static_cast<int>(i)));
        out.push_back(compose_simplicial_maps(fam[i], incl));
    }
    return out;
}

std::string LydakisMachine::family_key(const std::vector<SimplicialMap>& fam) {
    std::string s;
    for (const auto& f : fam) s += f.key() + "#";
    return s;
}

std::vector<std::pair<int, std::vector<int>>> LydakisMachine::all_chains(int n) const {
    const FinCategory& hc = *hom_->cat;
    std::vector<std::pair<int, std::vector<int>>> out;
    if (n == 0) {
        for (std::size_t o = 0; o < hc.num_objects(); ++o) out.push_back({static_cast<int>(o), {}});
        return out;
    }
    std::function<void(int, std::vector<int>&)> rec = [&](int start, std::vector<int>& chain) {
        if (static_cast<int>(chain.size()) == n) {
            out.push_back({start, chain});
            return;
        }
        int at = chain.empty() ? start : hc.morphisms[chain.back()].tgt;
        for (std::size_t m = 0; m < hc.num_morphisms(); ++m) {
            if (hc.morphisms[m].src != at) continue;
            chain.push_back(static_cast<int>(m));
            rec(start, chain);
            chain.pop_back();
        }
    };
    for (std::size_t o = 0; o < hc.num_objects(); ++o) {
        std::vector<int> chain;
        rec(static_cast<int>(o), chain);
    }
    return out;
}

LydakisReport lydakis_check(const Diagram& y, const Diagram& x, int up_to_dim, Budget& budget) {
    LydakisReport rep;
    HomCategory hom = hom_category(y, x, budget);
    LydakisMachine machine(hom, budget);
    for (int n = 0; n <= up_to_dim; ++n) {
        LydakisReport::DimRow row;
        row.dim = n;
        auto chains = machine.all_chains(n);
        row.nerve_count = static_cast<long long>(chains.size());
        auto families = machine.natural_families(n, budget);
        row.mapping_count = static_cast<long long>(families.size());

        std::set<std::string> family_keys;
        for (const auto& fam : families) family_keys.insert(LydakisMachine::family_key(fam));

        bool bij = (row.nerve_count == row.mapping_count);
        std::set<std::string> seen;
        for (const auto& [start, chain] : chains) {
            auto fam = machine.family_of_chain(n, start, chain);
            for (auto& f : fam)
                if (!check_simplicial_map(f).clean()) bij = false;
            if (!machine.family_natural(n, fam)) bij = false;
            std::string key = LydakisMachine::family_key(fam);
            if (seen.count(key)) bij = false;
            seen.insert(key);
            if (!family_keys.count(key)) bij = false;
        }
        row.bijection = bij;

        bool faces_ok = true;
        if (n >= 1) {
            const FinCategory& hc = *hom.cat;
            for (const auto& [start, chain] : chains) {
                auto fam = machine.family_of_chain(n, start, chain);
                for (int k = 0; k <= n; ++k) {
                    int fstart;
                    std::vector<int> fchain;
                    if (k == 0) {
                        fstart = hc.morphisms[chain[0]].tgt;
                        fchain.assign(chain.begin() + 1, chain.end());
                    } else if (k == n) {
                        fstart = start;
                        fchain.assign(chain.begin(), chain.end() - 1);
                    } else {
                        fstart = start;
                        fchain.assign(chain.begin(), chain.end());
                        fchain[k - 1] = hc.compose(fchain[k], fchain[k - 1]);
                        fchain.erase(fchain.begin() + k);
                    }
                    auto lhs = machine.family_of_chain(n - 1, fstart, fchain);
                    auto rhs = machine.family_face(n, fam, k);
                    if (LydakisMachine::family_key(lhs) != LydakisMachine::family_key(rhs))
                        faces_ok = false;
                }
            }
        }
        row.faces = faces_ok;
        if (!(row.bijection && row.faces)) rep.pass = false;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace catlim
