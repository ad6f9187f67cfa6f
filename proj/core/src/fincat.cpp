#include "catlim/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace catlim {

namespace {
std::uint64_t pair_key(int g, int f) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) |
           static_cast<std::uint32_t>(f);
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}
}  // namespace

int FinCategory::compose(int g, int f) const {
    auto it = compose_.find(pair_key(g, f));
    if (it == compose_.end())
        throw PreconditionError("compose(" + morphisms[g].id + ", " + morphisms[f].id +
                                ") undefined");
    return it->second;
}

std::optional<int> FinCategory::try_compose(int g, int f) const {
    auto it = compose_.find(pair_key(g, f));
    if (it == compose_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (std::size_t m = 0; m < morphisms.size(); ++m)
        if (morphisms[m].src == x && morphisms[m].tgt == y) out.push_back(static_cast<int>(m));
    return out;
}

bool FinCategory::same_data(const FinCategory& other) const {
    if (objects != other.objects) return false;
    if (morphisms.size() != other.morphisms.size()) return false;
    for (std::size_t m = 0; m < morphisms.size(); ++m)
        if (morphisms[m].id != other.morphisms[m].id || morphisms[m].src != other.morphisms[m].src ||
            morphisms[m].tgt != other.morphisms[m].tgt)
            return false;
    if (identity != other.identity) return false;
    if (compose_.size() != other.compose_.size()) return false;
    for (const auto& [k, v] : compose_) {
        auto it = other.compose_.find(k);
        if (it == other.compose_.end() || it->second != v) return false;
    }
    return true;
}

bool same_category_data(const FinCategory& a, const FinCategory& b) { return a.same_data(b); }

int CatBuilder::add_object(const std::string& id) {
    if (cat.obj_index_.count(id))
        throw PreconditionError("duplicate object id: " + id);
    cat.obj_index_[id] = static_cast<int>(cat.objects.size());
    cat.objects.push_back(id);
    cat.identity.push_back(-1);
    return static_cast<int>(cat.objects.size()) - 1;
}

int CatBuilder::add_morphism(const std::string& id, int src, int tgt) {
    if (cat.mor_index_.count(id))
        throw PreconditionError("duplicate morphism id: " + id);
    cat.mor_index_[id] = static_cast<int>(cat.morphisms.size());
    cat.morphisms.push_back({id, src, tgt});
    return static_cast<int>(cat.morphisms.size()) - 1;
}

void CatBuilder::set_identity(int obj, int mor) { cat.identity[obj] = mor; }

void CatBuilder::set_compose(int g, int f, int gf) { cat.compose_[pair_key(g, f)] = gf; }

CatPtr CatBuilder::freeze() {
    if (frozen_) throw PreconditionError("builder already frozen");
    frozen_ = true;
    return std::make_shared<const FinCategory>(std::move(cat));
}

// ---- functors and natural transformations ---------------------------------

std::string Functor::key() const { return "o[" + join_ints(omap) + "]m[" + join_ints(mmap) + "]"; }

Functor identity_functor(const CatPtr& c) {
    Functor f;
    f.src = c;
    f.tgt = c;
    f.omap.resize(c->num_objects());
    f.mmap.resize(c->num_morphisms());
    for (std::size_t i = 0; i < f.omap.size(); ++i) f.omap[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < f.mmap.size(); ++i) f.mmap[i] = static_cast<int>(i);
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    Functor h;
    h.src = f.src;
    h.tgt = g.tgt;
    h.omap.resize(f.omap.size());
    h.mmap.resize(f.mmap.size());
    for (std::size_t i = 0; i < f.omap.size(); ++i) h.omap[i] = g.omap[f.omap[i]];
    for (std::size_t i = 0; i < f.mmap.size(); ++i) h.mmap[i] = g.mmap[f.mmap[i]];
    return h;
}

bool functor_equal(const Functor& a, const Functor& b) {
    return a.omap == b.omap && a.mmap == b.mmap;
}

bool functor_is_isomorphism(const Functor& f) {
    if (f.src->num_objects() != f.tgt->num_objects()) return false;
    if (f.src->num_morphisms() != f.tgt->num_morphisms()) return false;
    std::vector<char> oseen(f.tgt->num_objects(), 0), mseen(f.tgt->num_morphisms(), 0);
    for (int o : f.omap) {
        if (oseen[o]) return false;
        oseen[o] = 1;
    }
    for (int m : f.mmap) {
        if (mseen[m]) return false;
        mseen[m] = 1;
    }
    return check_functor(f).clean();
}

std::string NatTrans::key() const { return "c[" + join_ints(component) + "]"; }

NatTrans identity_nat_trans(const Functor& f) {
    NatTrans eta;
    eta.source = f;
    eta.target = f;
    eta.component.resize(f.src->num_objects());
    for (std::size_t x = 0; x < eta.component.size(); ++x)
        eta.component[x] = f.tgt->identity[f.omap[x]];
    return eta;
}

NatTrans compose_nat_trans(const NatTrans& later, const NatTrans& earlier) {
    NatTrans eta;
    eta.source = earlier.source;
    eta.target = later.target;
    eta.component.resize(earlier.component.size());
    const FinCategory& d = *earlier.source.tgt;
    for (std::size_t x = 0; x < eta.component.size(); ++x)
        eta.component[x] = d.compose(later.component[x], earlier.component[x]);
    return eta;
}

NatTrans whisker_left(const Functor& h, const NatTrans& eta) {
    NatTrans out;
    out.source = compose_functors(h, eta.source);
    out.target = compose_functors(h, eta.target);
    out.component.resize(eta.component.size());
    for (std::size_t x = 0; x < eta.component.size(); ++x)
        out.component[x] = h.mmap[eta.component[x]];
    return out;
}

NatTrans whisker_right(const NatTrans& eta, const Functor& h) {
    NatTrans out;
    out.source = compose_functors(eta.source, h);
    out.target = compose_functors(eta.target, h);
    out.component.resize(h.omap.size());
    for (std::size_t x = 0; x < h.omap.size(); ++x) out.component[x] = eta.component[h.omap[x]];
    return out;
}

Diagram constant_diagram(const CatPtr& base, const CatPtr& value) {
    Diagram d;
    d.base = base;
    d.vertex.assign(base->num_objects(), value);
    d.transition.assign(base->num_morphisms(), identity_functor(value));
    return d;
}

// ---- validators ------------------------------------------------------------

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;
    rep.subject = "category";
    const auto nm = c.num_morphisms();
    for (std::size_t o = 0; o < c.num_objects(); ++o) {
        int id = c.identity[o];
        if (id < 0 || static_cast<std::size_t>(id) >= nm) {
            rep.add("identity-missing", "object " + c.objects[o] + " has no identity morphism");
            continue;
        }
        if (c.morphisms[id].src != static_cast<int>(o) || c.morphisms[id].tgt != static_cast<int>(o))
            rep.add("identity-typing", "identity of " + c.objects[o] + " is not an endomorphism of it");
    }
    // composition typing and totality on composable pairs
    for (std::size_t g = 0; g < nm; ++g)
        for (std::size_t f = 0; f < nm; ++f) {
            bool comp = c.composable(static_cast<int>(g), static_cast<int>(f));
            auto gf = c.try_compose(static_cast<int>(g), static_cast<int>(f));
            if (comp && !gf)
                rep.add("composition-missing", "compose(" + c.morphisms[g].id + ", " +
                                                   c.morphisms[f].id + ") undefined");
            if (!comp && gf)
                rep.add("composition-spurious", "compose(" + c.morphisms[g].id + ", " +
                                                    c.morphisms[f].id + ") defined on non-composable pair");
            if (comp && gf) {
                const Morphism& m = c.morphisms[*gf];
                if (m.src != c.morphisms[f].src || m.tgt != c.morphisms[g].tgt)
                    rep.add("typing", "compose(" + c.morphisms[g].id + ", " + c.morphisms[f].id +
                                          ") = " + m.id + " has wrong endpoints");
            }
        }
    // units
    for (std::size_t m = 0; m < nm; ++m) {
        const Morphism& mor = c.morphisms[m];
        int ids = c.identity[mor.src], idt = c.identity[mor.tgt];
        if (ids >= 0) {
            auto r = c.try_compose(static_cast<int>(m), ids);
            if (r && *r != static_cast<int>(m))
                rep.add("unit", mor.id + " o id != " + mor.id);
        }
        if (idt >= 0) {
            auto l = c.try_compose(idt, static_cast<int>(m));
            if (l && *l != static_cast<int>(m))
                rep.add("unit", "id o " + mor.id + " != " + mor.id);
        }
    }
    // associativity on every composable triple
    for (std::size_t h = 0; h < nm; ++h)
        for (std::size_t g = 0; g < nm; ++g) {
            if (!c.composable(static_cast<int>(h), static_cast<int>(g))) continue;
            auto hg = c.try_compose(static_cast<int>(h), static_cast<int>(g));
            if (!hg) continue;
            for (std::size_t f = 0; f < nm; ++f) {
                if (!c.composable(static_cast<int>(g), static_cast<int>(f))) continue;
                auto gf = c.try_compose(static_cast<int>(g), static_cast<int>(f));
                if (!gf) continue;
                auto a = c.try_compose(static_cast<int>(h), *gf);
                auto b = c.try_compose(*hg, static_cast<int>(f));
                if (a && b && *a != *b)
                    rep.add("associativity", "(" + c.morphisms[h].id + " o " + c.morphisms[g].id +
                                                 ") o " + c.morphisms[f].id + " differs from " +
                                                 c.morphisms[h].id + " o (" + c.morphisms[g].id +
                                                 " o " + c.morphisms[f].id + ")");
            }
        }
    return rep;
}

ValidationReport check_functor(const Functor& f) {
    ValidationReport rep;
    rep.subject = "functor";
    const FinCategory& c = *f.src;
    const FinCategory& d = *f.tgt;
    if (f.omap.size() != c.num_objects() || f.mmap.size() != c.num_morphisms()) {
        rep.add("shape", "object/morphism map sizes do not match the source category");
        return rep;
    }
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        const Morphism& mor = c.morphisms[m];
        const Morphism& img = d.morphisms[f.mmap[m]];
        if (img.src != f.omap[mor.src] || img.tgt != f.omap[mor.tgt])
            rep.add("typing", "image of " + mor.id + " has wrong endpoints");
    }
    for (std::size_t o = 0; o < c.num_objects(); ++o)
        if (f.mmap[c.identity[o]] != d.identity[f.omap[o]])
            rep.add("identity", "identity of " + c.objects[o] + " not sent to an identity");
    for (std::size_t g = 0; g < c.num_morphisms(); ++g)
        for (std::size_t ff = 0; ff < c.num_morphisms(); ++ff) {
            auto gf = c.try_compose(static_cast<int>(g), static_cast<int>(ff));
            if (!gf) continue;
            auto img = d.try_compose(f.mmap[g], f.mmap[ff]);
            if (!img || *img != f.mmap[*gf])
                rep.add("composition", "F(" + c.morphisms[g].id + " o " + c.morphisms[ff].id +
                                           ") != F(" + c.morphisms[g].id + ") o F(" +
                                           c.morphisms[ff].id + ")");
        }
    return rep;
}

ValidationReport check_nat_trans(const NatTrans& eta) {
    ValidationReport rep;
    rep.subject = "natural transformation";
    const FinCategory& c = *eta.source.src;
    const FinCategory& d = *eta.source.tgt;
    if (!eta.source.src->same_data(*eta.target.src) || !eta.source.tgt->same_data(*eta.target.tgt)) {
        rep.add("shape", "source and target functors are not parallel");
        return rep;
    }
    if (eta.component.size() != c.num_objects()) {
        rep.add("shape", "component count does not match the source category");
        return rep;
    }
    for (std::size_t x = 0; x < c.num_objects(); ++x) {
        const Morphism& comp = d.morphisms[eta.component[x]];
        if (comp.src != eta.source.omap[x] || comp.tgt != eta.target.omap[x])
            rep.add("typing", "component at " + c.objects[x] + " has wrong endpoints");
    }
    if (!rep.clean()) return rep;
    for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
        const Morphism& mor = c.morphisms[m];
        int lhs = d.compose(eta.component[mor.tgt], eta.source.mmap[m]);
        int rhs = d.compose(eta.target.mmap[m], eta.component[mor.src]);
        if (lhs != rhs)
            rep.add("naturality", "square at " + mor.id + " does not commute");
    }
    return rep;
}

ValidationReport check_diagram(const Diagram& dia) {
    ValidationReport rep;
    rep.subject = "diagram";
    const FinCategory& base = *dia.base;
    if (dia.vertex.size() != base.num_objects() || dia.transition.size() != base.num_morphisms()) {
        rep.add("shape", "vertex/transition counts do not match the base");
        return rep;
    }
    for (std::size_t m = 0; m < base.num_morphisms(); ++m) {
        const Morphism& mor = base.morphisms[m];
        const Functor& t = dia.transition[m];
        if (!t.src->same_data(*dia.vertex[mor.src]) || !t.tgt->same_data(*dia.vertex[mor.tgt]))
            rep.add("typing", "transition at " + mor.id + " has wrong endpoints");
        else {
            auto sub = check_functor(t);
            for (auto& v : sub.violations)
                rep.add("transition-" + v.code, "at " + mor.id + ": " + v.detail);
        }
    }
    if (!rep.clean()) return rep;
    for (std::size_t o = 0; o < base.num_objects(); ++o)
        if (!functor_equal(dia.transition[base.identity[o]], identity_functor(dia.vertex[o])))
            rep.add("identity", "transition at identity of " + base.objects[o] + " is not the identity");
    for (std::size_t g = 0; g < base.num_morphisms(); ++g)
        for (std::size_t f = 0; f < base.num_morphisms(); ++f) {
            auto gf = base.try_compose(static_cast<int>(g), static_cast<int>(f));
            if (!gf) continue;
            Functor comp = compose_functors(dia.transition[g], dia.transition[f]);
            if (!functor_equal(comp, dia.transition[*gf]))
                rep.add("functoriality", "transition at " + base.morphisms[g].id + " o " +
                                             base.morphisms[f].id + " is not the composite");
        }
    return rep;
}

// ---- poset / product -------------------------------------------------------

CatPtr poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& order_pairs) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < elements.size(); ++i) idx[elements[i]] = static_cast<int>(i);
    std::vector<std::vector<char>> le(elements.size(), std::vector<char>(elements.size(), 0));
    for (auto& [a, b] : order_pairs) {
        auto ai = idx.find(a), bi = idx.find(b);
        if (ai == idx.end() || bi == idx.end())
            throw PreconditionError("order pair references unknown element: (" + a + ", " + b + ")");
        le[ai->second][bi->second] = 1;
    }
    for (std::size_t i = 0; i < elements.size(); ++i) le[i][i] = 1;
    const std::size_t n = elements.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (le[a][b] && le[b][c] && !le[a][c])
                    throw PreconditionError("order pairs are not transitively closed: " +
                                            elements[a] + " <= " + elements[b] + " <= " + elements[c]);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (le[a][b] && le[b][a])
                throw PreconditionError("order pairs violate antisymmetry: " + elements[a] +
                                        " and " + elements[b]);
    CatBuilder b;
    for (const auto& e : elements) b.add_object(e);
    std::vector<std::vector<int>> mor(n, std::vector<int>(n, -1));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (le[x][y])
                mor[x][y] = b.add_morphism(elements[x] + "<=" + elements[y], static_cast<int>(x),
                                           static_cast<int>(y));
    for (std::size_t x = 0; x < n; ++x) b.set_identity(static_cast<int>(x), mor[x][x]);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (le[x][y] && le[y][z]) b.set_compose(mor[y][z], mor[x][y], mor[x][z]);
    return b.freeze();
}

int ProductCategory::object_pair(int i, int j) const {
    return i * static_cast<int>(right->num_objects()) + j;
}
int ProductCategory::morphism_pair(int i, int j) const {
    return i * static_cast<int>(right->num_morphisms()) + j;
}
std::pair<int, int> ProductCategory::object_factors(int p) const {
    int n = static_cast<int>(right->num_objects());
    return {p / n, p % n};
}
std::pair<int, int> ProductCategory::morphism_factors(int p) const {
    int n = static_cast<int>(right->num_morphisms());
    return {p / n, p % n};
}

ProductCategory product_category(const CatPtr& c, const CatPtr& d) {
    ProductCategory out;
    out.left = c;
    out.right = d;
    CatBuilder b;
    for (const auto& x : c->objects)
        for (const auto& y : d->objects) b.add_object("(" + x + "|" + y + ")");
    for (const auto& f : c->morphisms)
        for (const auto& g : d->morphisms)
            b.add_morphism("(" + f.id + "|" + g.id + ")",
                           f.src * static_cast<int>(d->num_objects()) + g.src,
                           f.tgt * static_cast<int>(d->num_objects()) + g.tgt);
    const int nm = static_cast<int>(d->num_morphisms());
    for (std::size_t o = 0; o < c->num_objects(); ++o)
        for (std::size_t p = 0; p < d->num_objects(); ++p)
            b.set_identity(static_cast<int>(o * d->num_objects() + p),
                           c->identity[o] * nm + d->identity[p]);
    for (std::size_t g1 = 0; g1 < c->num_morphisms(); ++g1)
        for (std::size_t f1 = 0; f1 < c->num_morphisms(); ++f1) {
            auto c1 = c->try_compose(static_cast<int>(g1), static_cast<int>(f1));
            if (!c1) continue;
            for (std::size_t g2 = 0; g2 < d->num_morphisms(); ++g2)
                for (std::size_t f2 = 0; f2 < d->num_morphisms(); ++f2) {
                    auto c2 = d->try_compose(static_cast<int>(g2), static_cast<int>(f2));
                    if (!c2) continue;
                    b.set_compose(static_cast<int>(g1) * nm + static_cast<int>(g2),
                                  static_cast<int>(f1) * nm + static_cast<int>(f2), *c1 * nm + *c2);
                }
        }
    out.cat = b.freeze();
    return out;
}

int NaryProductCategory::object_tuple(const std::vector<int>& t) const {
    int p = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        p = p * static_cast<int>(factors[i]->num_objects()) + t[i];
    return p;
}
int NaryProductCategory::morphism_tuple(const std::vector<int>& t) const {
    int p = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
        p = p * static_cast<int>(factors[i]->num_morphisms()) + t[i];
    return p;
}
std::vector<int> NaryProductCategory::object_factors(int p) const {
    std::vector<int> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        int n = static_cast<int>(factors[i]->num_objects());
        t[i] = p % n;
        p /= n;
    }
    return t;
}
std::vector<int> NaryProductCategory::morphism_factors(int p) const {
    std::vector<int> t(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        int n = static_cast<int>(factors[i]->num_morphisms());
        t[i] = p % n;
        p /= n;
    }
    return t;
}

NaryProductCategory nary_product_category(const std::vector<CatPtr>& factors) {
    NaryProductCategory out;
    out.factors = factors;
    CatBuilder b;
    std::vector<int> t(factors.size(), 0);
    // objects in lexicographic tuple order
    std::function<void(std::size_t, std::string)> rec_obj = [&](std::size_t k, std::string id) {
        if (k == factors.size()) {
            b.add_object("(" + id + ")");
            return;
        }
        for (std::size_t i = 0; i < factors[k]->num_objects(); ++i)
            rec_obj(k + 1, k ? id + "|" + factors[k]->objects[i] : factors[k]->objects[i]);
    };
    rec_obj(0, "");
    std::function<void(std::size_t, std::string, std::vector<int>&, std::vector<int>&)> rec_mor =
        [&](std::size_t k, std::string id, std::vector<int>& srcs, std::vector<int>& tgts) {
            if (k == factors.size()) {
                b.add_morphism("(" + id + ")", out.object_tuple(srcs), out.object_tuple(tgts));
                return;
            }
            for (std::size_t i = 0; i < factors[k]->num_morphisms(); ++i) {
                srcs.push_back(factors[k]->morphisms[i].src);
                tgts.push_back(factors[k]->morphisms[i].tgt);
                rec_mor(k + 1, k ? id + "|" + factors[k]->morphisms[i].id : factors[k]->morphisms[i].id,
                        srcs, tgts);
                srcs.pop_back();
                tgts.pop_back();
            }
        };
    std::vector<int> srcs, tgts;
    out.cat = nullptr;
    rec_mor(0, "", srcs, tgts);
    // identities and composition
    std::size_t nobj = 1, nmor = 1;
    for (auto& f : factors) {
        nobj *= f->num_objects();
        nmor *= f->num_morphisms();
    }
    for (std::size_t p = 0; p < nobj; ++p) {
        std::vector<int> to(factors.size());
        std::size_t q = p;
        for (std::size_t i = factors.size(); i-- > 0;) {
            to[i] = static_cast<int>(q % factors[i]->num_objects());
            q /= factors[i]->num_objects();
        }
        std::vector<int> tm(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) tm[i] = factors[i]->identity[to[i]];
        b.set_identity(static_cast<int>(p), out.morphism_tuple(tm));
    }
    for (std::size_t g = 0; g < nmor; ++g)
        for (std::size_t f = 0; f < nmor; ++f) {
            std::vector<int> tg(factors.size()), tf(factors.size()), tc(factors.size());
            std::size_t qg = g, qf = f;
            for (std::size_t i = factors.size(); i-- > 0;) {
                tg[i] = static_cast<int>(qg % factors[i]->num_morphisms());
                qg /= factors[i]->num_morphisms();
                tf[i] = static_cast<int>(qf % factors[i]->num_morphisms());
                qf /= factors[i]->num_morphisms();
            }
            bool ok = true;
            for (std::size_t i = 0; i < factors.size() && ok; ++i) {
                auto ci = factors[i]->try_compose(tg[i], tf[i]);
                if (!ci)
                    ok = false;
                else
                    tc[i] = *ci;
            }
            if (ok)
                b.set_compose(static_cast<int>(g), static_cast<int>(f), out.morphism_tuple(tc));
        }
    out.cat = b.freeze();
    return out;
}

// ---- slice constructions ----------------------------------------------------

namespace {
// Shared builder for under-style slices: objects are the morphisms of c whose
// source lies in srcs; a morphism (alpha -> beta) is a mediator delta with
// delta o alpha = beta.
SliceCategory maps_out_slice(const CatPtr& c, const std::vector<int>& srcs, bool with_identities) {
    std::vector<char> in_src(c->num_objects(), 0);
    for (int s : srcs) in_src[s] = 1;
    SliceCategory out;
    CatBuilder b;
    std::vector<int> obj_of_mor(c->num_morphisms(), -1);
    for (std::size_t m = 0; m < c->num_morphisms(); ++m) {
        if (!in_src[c->morphisms[m].src]) continue;
        if (!with_identities && c->is_identity(static_cast<int>(m))) continue;
        obj_of_mor[m] = b.add_object(c->morphisms[m].id);
        out.object_mor.push_back(static_cast<int>(m));
    }
    struct Mor {
        int src_obj, tgt_obj, delta;
    };
    std::vector<Mor> mors;
    for (int alpha : out.object_mor)
        for (std::size_t delta = 0; delta < c->num_morphisms(); ++delta) {
            if (!c->composable(static_cast<int>(delta), alpha)) continue;
            int beta = c->compose(static_cast<int>(delta), alpha);
            if (obj_of_mor[beta] < 0) continue;
            int idx = b.add_morphism("(" + c->morphisms[alpha].id + ">" + c->morphisms[delta].id + ")",
                                     obj_of_mor[alpha], obj_of_mor[beta]);
            (void)idx;
            mors.push_back({obj_of_mor[alpha], obj_of_mor[beta], static_cast<int>(delta)});
        }
    for (std::size_t o = 0; o < out.object_mor.size(); ++o) {
        int alpha = out.object_mor[o];
        int ident = c->identity[c->morphisms[alpha].tgt];
        int mi = b.cat.morphism_index("(" + c->morphisms[alpha].id + ">" + c->morphisms[ident].id + ")");
        b.set_identity(static_cast<int>(o), mi);
    }
    for (std::size_t m2 = 0; m2 < mors.size(); ++m2)
        for (std::size_t m1 = 0; m1 < mors.size(); ++m1) {
            if (mors[m1].tgt_obj != mors[m2].src_obj) continue;
            int delta = c->compose(mors[m2].delta, mors[m1].delta);
            int alpha = out.object_mor[mors[m1].src_obj];
            int mi = b.cat.morphism_index("(" + c->morphisms[alpha].id + ">" + c->morphisms[delta].id + ")");
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1), mi);
        }
    out.cat = b.freeze();
    out.projection.src = out.cat;
    out.projection.tgt = c;
    out.projection.omap.resize(out.cat->num_objects());
    for (std::size_t o = 0; o < out.object_mor.size(); ++o)
        out.projection.omap[o] = c->morphisms[out.object_mor[o]].tgt;
    out.projection.mmap.resize(out.cat->num_morphisms());
    for (std::size_t m = 0; m < mors.size(); ++m) out.projection.mmap[m] = mors[m].delta;
    return out;
}

// Objects are the morphisms of c into tgt; a morphism (phi -> psi) is a
// mediator u with psi o u = phi.
SliceCategory maps_in_slice(const CatPtr& c, int tgt) {
    SliceCategory out;
    CatBuilder b;
    std::vector<int> obj_of_mor(c->num_morphisms(), -1);
    for (std::size_t m = 0; m < c->num_morphisms(); ++m) {
        if (c->morphisms[m].tgt != tgt) continue;
        obj_of_mor[m] = b.add_object(c->morphisms[m].id);
        out.object_mor.push_back(static_cast<int>(m));
    }
    struct Mor {
        int src_obj, tgt_obj, u;
    };
    std::vector<Mor> mors;
    for (int phi : out.object_mor)
        for (std::size_t u = 0; u < c->num_morphisms(); ++u) {
            // u : src(phi) -> a', looking for psi with psi o u = phi
            if (c->morphisms[u].src != c->morphisms[phi].src) continue;
            for (int psi : out.object_mor) {
                if (c->morphisms[psi].src != c->morphisms[u].tgt) continue;
                if (c->compose(psi, static_cast<int>(u)) != phi) continue;
                mors.push_back({obj_of_mor[phi], obj_of_mor[psi], static_cast<int>(u)});
                b.add_morphism("(" + c->morphisms[phi].id + ">" + c->morphisms[u].id + ">" +
                                   c->morphisms[psi].id + ")",
                               obj_of_mor[phi], obj_of_mor[psi]);
            }
        }
    auto mor_id = [&](int phi, int u, int psi) {
        return "(" + c->morphisms[phi].id + ">" + c->morphisms[u].id + ">" + c->morphisms[psi].id + ")";
    };
    for (std::size_t o = 0; o < out.object_mor.size(); ++o) {
        int phi = out.object_mor[o];
        int ident = c->identity[c->morphisms[phi].src];
        b.set_identity(static_cast<int>(o), b.cat.morphism_index(mor_id(phi, ident, phi)));
    }
    for (std::size_t m2 = 0; m2 < mors.size(); ++m2)
        for (std::size_t m1 = 0; m1 < mors.size(); ++m1) {
            if (mors[m1].tgt_obj != mors[m2].src_obj) continue;
            int u = c->compose(mors[m2].u, mors[m1].u);
            int phi = out.object_mor[mors[m1].src_obj];
            int psi = out.object_mor[mors[m2].tgt_obj];
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1),
                          b.cat.morphism_index(mor_id(phi, u, psi)));
        }
    out.cat = b.freeze();
    out.projection.src = out.cat;
    out.projection.tgt = c;
    out.projection.omap.resize(out.cat->num_objects());
    for (std::size_t o = 0; o < out.object_mor.size(); ++o)
        out.projection.omap[o] = c->morphisms[out.object_mor[o]].src;
    out.projection.mmap.resize(out.cat->num_morphisms());
    for (std::size_t m = 0; m < mors.size(); ++m) out.projection.mmap[m] = mors[m].u;
    return out;
}
}  // namespace

SliceCategory over_category(const CatPtr& c, int obj) {
    if (obj < 0 || static_cast<std::size_t>(obj) >= c->num_objects())
        throw PreconditionError("over_category: unknown object");
    return maps_in_slice(c, obj);
}

SliceCategory under_category(const CatPtr& c, int obj) {
    if (obj < 0 || static_cast<std::size_t>(obj) >= c->num_objects())
        throw PreconditionError("under_category: unknown object");
    return maps_out_slice(c, {obj}, true);
}

SliceCategory strict_under(const CatPtr& c, int obj) {
    if (obj < 0 || static_cast<std::size_t>(obj) >= c->num_objects())
        throw PreconditionError("strict_under: unknown object");
    return maps_out_slice(c, {obj}, false);
}

UnionUnder union_under(const CatPtr& c, const std::vector<int>& objs) {
    auto deg = degree_function(*c);
    for (std::size_t i = 1; i < objs.size(); ++i)
        if (deg[objs[i]] != deg[objs[0]])
            throw PreconditionError("union_under: objects " + c->objects[objs[0]] + " and " +
                                    c->objects[objs[i]] + " have different degrees");
    UnionUnder out;
    out.le = maps_out_slice(c, objs, true);
    out.lt = maps_out_slice(c, objs, false);
    out.inclusion.src = out.lt.cat;
    out.inclusion.tgt = out.le.cat;
    out.inclusion.omap.resize(out.lt.cat->num_objects());
    for (std::size_t o = 0; o < out.lt.cat->num_objects(); ++o)
        out.inclusion.omap[o] = out.le.cat->object_index(out.lt.cat->objects[o]);
    out.inclusion.mmap.resize(out.lt.cat->num_morphisms());
    for (std::size_t m = 0; m < out.lt.cat->num_morphisms(); ++m)
        out.inclusion.mmap[m] = out.le.cat->morphism_index(out.lt.cat->morphisms[m].id);
    return out;
}

// ---- degree / filtration -----------------------------------------------------

std::vector<int> degree_function(const FinCategory& c) {
    // longest path over the graph of non-identity morphisms, with cycle detection
    std::vector<std::vector<int>> succ(c.num_objects());
    for (std::size_t m = 0; m < c.num_morphisms(); ++m)
        if (!c.is_identity(static_cast<int>(m)))
            succ[c.morphisms[m].src].push_back(c.morphisms[m].tgt);
    std::vector<int> deg(c.num_objects(), -1);
    std::vector<int> state(c.num_objects(), 0);  // 0 unseen, 1 on stack, 2 done
    std::function<int(int)> dfs = [&](int v) -> int {
        if (state[v] == 1)
            throw NotLeftFinite("cycle of non-identity morphisms through " + c.objects[v]);
        if (state[v] == 2) return deg[v];
        state[v] = 1;
        int best = 0;
        for (int w : succ[v]) best = std::max(best, 1 + dfs(w));
        state[v] = 2;
        deg[v] = best;
        return best;
    };
    for (std::size_t v = 0; v < c.num_objects(); ++v) dfs(static_cast<int>(v));
    return deg;
}

Filtration full_subcategory(const CatPtr& c, const std::vector<int>& objs) {
    Filtration out;
    out.object_of_ambient = objs;
    std::vector<char> keep(c->num_objects(), 0);
    for (int o : objs) keep[o] = 1;
    CatBuilder b;
    std::vector<int> new_obj(c->num_objects(), -1);
    for (int o : objs) new_obj[o] = b.add_object(c->objects[o]);
    std::vector<int> new_mor(c->num_morphisms(), -1);
    std::vector<int> kept_mors;
    for (std::size_t m = 0; m < c->num_morphisms(); ++m)
        if (keep[c->morphisms[m].src] && keep[c->morphisms[m].tgt]) {
            new_mor[m] = b.add_morphism(c->morphisms[m].id, new_obj[c->morphisms[m].src],
                                        new_obj[c->morphisms[m].tgt]);
            kept_mors.push_back(static_cast<int>(m));
        }
    for (int o : objs) b.set_identity(new_obj[o], new_mor[c->identity[o]]);
    for (int g : kept_mors)
        for (int f : kept_mors) {
            auto gf = c->try_compose(g, f);
            if (gf) b.set_compose(new_mor[g], new_mor[f], new_mor[*gf]);
        }
    out.cat = b.freeze();
    out.inclusion.src = out.cat;
    out.inclusion.tgt = c;
    out.inclusion.omap = objs;
    out.inclusion.mmap = kept_mors;
    return out;
}

Filtration filtration(const CatPtr& c, int n) {
    auto deg = degree_function(*c);
    std::vector<int> objs;
    for (std::size_t o = 0; o < c->num_objects(); ++o)
        if (deg[o] <= n) objs.push_back(static_cast<int>(o));
    return full_subcategory(c, objs);
}

std::vector<int> degree_layer(const FinCategory& c, int n) {
    auto deg = degree_function(c);
    std::vector<int> objs;
    for (std::size_t o = 0; o < c.num_objects(); ++o)
        if (deg[o] == n) objs.push_back(static_cast<int>(o));
    return objs;
}

// ---- comma categories --------------------------------------------------------

namespace {
CommaCategory comma_build(const Functor& f, int obj, bool over) {
    const FinCategory& c = *f.src;
    const FinCategory& d = *f.tgt;
    if (obj < 0 || static_cast<std::size_t>(obj) >= d.num_objects())
        throw PreconditionError("comma: unknown object");
    CommaCategory out;
    CatBuilder b;
    std::map<std::pair<int, int>, int> find;
    for (std::size_t a = 0; a < c.num_objects(); ++a)
        for (std::size_t phi = 0; phi < d.num_morphisms(); ++phi) {
            bool ok = over ? (d.morphisms[phi].src == f.omap[a] && d.morphisms[phi].tgt == obj)
                           : (d.morphisms[phi].src == obj && d.morphisms[phi].tgt == f.omap[a]);
            if (!ok) continue;
            int o = b.add_object("(" + c.objects[a] + "," + d.morphisms[phi].id + ")");
            out.object_a.push_back(static_cast<int>(a));
            out.object_phi.push_back(static_cast<int>(phi));
            find[{static_cast<int>(a), static_cast<int>(phi)}] = o;
        }
    struct Mor {
        int src_obj, tgt_obj, u;
    };
    std::vector<Mor> mors;
    for (std::size_t o = 0; o < out.object_a.size(); ++o) {
        int a = out.object_a[o], phi = out.object_phi[o];
        for (std::size_t u = 0; u < c.num_morphisms(); ++u) {
            if (c.morphisms[u].src != a) continue;
            int a2 = c.morphisms[u].tgt;
            int phi2;
            if (over) {
                // need phi2 : F a2 -> obj with phi2 o F u = phi; u determines nothing,
                // enumerate candidates
                for (std::size_t cand = 0; cand < d.num_morphisms(); ++cand) {
                    if (d.morphisms[cand].src != f.omap[a2] || d.morphisms[cand].tgt != obj) continue;
                    if (d.compose(static_cast<int>(cand), f.mmap[u]) != phi) continue;
                    phi2 = static_cast<int>(cand);
                    auto it = find.find({a2, phi2});
                    if (it == find.end()) continue;
                    mors.push_back({static_cast<int>(o), it->second, static_cast<int>(u)});
                    b.add_morphism("(" + b.cat.objects[o] + ">" + c.morphisms[u].id + ">" +
                                       b.cat.objects[it->second] + ")",
                                   static_cast<int>(o), it->second);
                }
            } else {
                // phi2 = F u o phi is forced
                phi2 = d.compose(f.mmap[u], phi);
                auto it = find.find({a2, phi2});
                if (it == find.end()) continue;
                mors.push_back({static_cast<int>(o), it->second, static_cast<int>(u)});
                b.add_morphism("(" + b.cat.objects[o] + ">" + c.morphisms[u].id + ">" +
                                   b.cat.objects[it->second] + ")",
                               static_cast<int>(o), it->second);
            }
        }
    }
    auto mor_id = [&](int so, int u, int to) {
        return "(" + b.cat.objects[so] + ">" + c.morphisms[u].id + ">" + b.cat.objects[to] + ")";
    };
    for (std::size_t o = 0; o < out.object_a.size(); ++o)
        b.set_identity(static_cast<int>(o),
                       b.cat.morphism_index(mor_id(static_cast<int>(o), c.identity[out.object_a[o]],
                                                   static_cast<int>(o))));
    for (std::size_t m2 = 0; m2 < mors.size(); ++m2)
        for (std::size_t m1 = 0; m1 < mors.size(); ++m1) {
            if (mors[m1].tgt_obj != mors[m2].src_obj) continue;
            int u = c.compose(mors[m2].u, mors[m1].u);
            b.set_compose(static_cast<int>(m2), static_cast<int>(m1),
                          b.cat.morphism_index(mor_id(mors[m1].src_obj, u, mors[m2].tgt_obj)));
        }
    out.cat = b.freeze();
    out.projection.src = out.cat;
    out.projection.tgt = f.src;
    out.projection.omap = out.object_a;
    out.projection.mmap.resize(mors.size());
    for (std::size_t m = 0; m < mors.size(); ++m) out.projection.mmap[m] = mors[m].u;
    return out;
}
}  // namespace

int CommaCategory::find_object(int a, int phi) const {
    for (std::size_t o = 0; o < object_a.size(); ++o)
        if (object_a[o] == a && object_phi[o] == phi) return static_cast<int>(o);
    return -1;
}

CommaCategory comma_over(const Functor& f, int obj) { return comma_build(f, obj, true); }
CommaCategory comma_under(const Functor& f, int obj) { return comma_build(f, obj, false); }

Functor comma_post_functor(const Functor& f, const CommaCategory& at_src,
                           const CommaCategory& at_tgt, int lam) {
    const FinCategory& d = *f.tgt;
    Functor out;
    out.src = at_src.cat;
    out.tgt = at_tgt.cat;
    out.omap.resize(at_src.cat->num_objects());
    for (std::size_t o = 0; o < at_src.object_a.size(); ++o) {
        int phi2 = d.compose(lam, at_src.object_phi[o]);
        int img = at_tgt.find_object(at_src.object_a[o], phi2);
        if (img < 0) throw PreconditionError("comma_post_functor: image object missing");
        out.omap[o] = img;
    }
    out.mmap.resize(at_src.cat->num_morphisms());
    for (std::size_t m = 0; m < at_src.cat->num_morphisms(); ++m) {
        int so = at_src.cat->morphisms[m].src;
        int to = at_src.cat->morphisms[m].tgt;
        int u = at_src.projection.mmap[m];
        std::string id = "(" + at_tgt.cat->objects[out.omap[so]] + ">" + f.src->morphisms[u].id +
                         ">" + at_tgt.cat->objects[out.omap[to]] + ")";
        int img = at_tgt.cat->morphism_index(id);
        if (img < 0) throw PreconditionError("comma_post_functor: image morphism missing");
        out.mmap[m] = img;
    }
    return out;
}

// ---- initial / terminal ------------------------------------------------------

bool is_initial(const FinCategory& c, int obj) {
    for (std::size_t y = 0; y < c.num_objects(); ++y)
        if (c.hom(obj, static_cast<int>(y)).size() != 1) return false;
    return true;
}

bool is_terminal(const FinCategory& c, int obj) {
    for (std::size_t x = 0; x < c.num_objects(); ++x)
        if (c.hom(static_cast<int>(x), obj).size() != 1) return false;
    return true;
}

std::optional<int> find_initial(const FinCategory& c) {
    for (std::size_t o = 0; o < c.num_objects(); ++o)
        if (is_initial(c, static_cast<int>(o))) return static_cast<int>(o);
    return std::nullopt;
}

std::optional<int> find_terminal(const FinCategory& c) {
    for (std::size_t o = 0; o < c.num_objects(); ++o)
        if (is_terminal(c, static_cast<int>(o))) return static_cast<int>(o);
    return std::nullopt;
}

// ---- enumeration ---------------------------------------------------------------

std::vector<Functor> all_functors(const CatPtr& c, const CatPtr& d, Budget& budget) {
    std::vector<Functor> out;
    const std::size_t no = c->num_objects(), nm = c->num_morphisms();
    Functor f;
    f.src = c;
    f.tgt = d;
    f.omap.assign(no, -1);
    f.mmap.assign(nm, -1);
    if (no > 0 && d->num_objects() == 0) return out;

    // triples (g, h, gh); checked once all three images are assigned, i.e. when
    // the largest of the indices gets its image
    struct Triple {
        int g, h, gh;
    };
    std::vector<std::vector<Triple>> due(nm);
    for (std::size_t g = 0; g < nm; ++g)
        for (std::size_t h = 0; h < nm; ++h) {
            auto gh = c->try_compose(static_cast<int>(g), static_cast<int>(h));
            if (!gh) continue;
            int last = std::max({static_cast<int>(g), static_cast<int>(h), *gh});
            due[last].push_back({static_cast<int>(g), static_cast<int>(h), *gh});
        }

    auto triples_ok = [&](std::size_t m) {
        for (const Triple& t : due[m])
            if (d->compose(f.mmap[t.g], f.mmap[t.h]) != f.mmap[t.gh]) return false;
        return true;
    };

    std::function<void(std::size_t)> assign_mor = [&](std::size_t m) {
        budget.tick();
        if (m == nm) {
            out.push_back(f);
            return;
        }
        const Morphism& mor = c->morphisms[m];
        if (c->is_identity(static_cast<int>(m))) {
            f.mmap[m] = d->identity[f.omap[mor.src]];
            if (triples_ok(m)) assign_mor(m + 1);
            f.mmap[m] = -1;
            return;
        }
        for (std::size_t cand = 0; cand < d->num_morphisms(); ++cand) {
            if (d->morphisms[cand].src != f.omap[mor.src] || d->morphisms[cand].tgt != f.omap[mor.tgt])
                continue;
            f.mmap[m] = static_cast<int>(cand);
            if (triples_ok(m)) assign_mor(m + 1);
        }
        f.mmap[m] = -1;
    };

    std::function<void(std::size_t)> assign_obj = [&](std::size_t o) {
        budget.tick();
        if (o == no) {
            assign_mor(0);
            return;
        }
        for (std::size_t cand = 0; cand < d->num_objects(); ++cand) {
            f.omap[o] = static_cast<int>(cand);
            assign_obj(o + 1);
        }
        f.omap[o] = -1;
    };
    assign_obj(0);
    return out;
}

std::vector<NatTrans> all_nat_trans(const Functor& f, const Functor& g, Budget& budget) {
    std::vector<NatTrans> out;
    const FinCategory& c = *f.src;
    const FinCategory& d = *f.tgt;
    NatTrans eta;
    eta.source = f;
    eta.target = g;
    eta.component.assign(c.num_objects(), -1);
    std::function<void(std::size_t)> assign = [&](std::size_t x) {
        budget.tick();
        if (x == c.num_objects()) {
            out.push_back(eta);
            return;
        }
        for (std::size_t cand = 0; cand < d.num_morphisms(); ++cand) {
            if (d.morphisms[cand].src != f.omap[x] || d.morphisms[cand].tgt != g.omap[x]) continue;
            eta.component[x] = static_cast<int>(cand);
            bool ok = true;
            for (std::size_t m = 0; m < c.num_morphisms() && ok; ++m) {
                const Morphism& mor = c.morphisms[m];
                if (eta.component[mor.src] < 0 || eta.component[mor.tgt] < 0) continue;
                if (d.compose(eta.component[mor.tgt], f.mmap[m]) !=
                    d.compose(g.mmap[m], eta.component[mor.src]))
                    ok = false;
            }
            if (ok) assign(x + 1);
        }
        eta.component[x] = -1;
    };
    assign(0);
    return out;
}

Functor rebase_functor(const Functor& f, const CatPtr& new_src, const CatPtr& new_tgt) {
    if (!f.src->same_data(*new_src) || !f.tgt->same_data(*new_tgt))
        throw PreconditionError("rebase_functor: replacement endpoints differ structurally");
    Functor out = f;
    out.src = new_src;
    out.tgt = new_tgt;
    return out;
}

}  // namespace catlim
