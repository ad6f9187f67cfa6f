#include "catlim/simpl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace catlim {

// ---- values -------------------------------------------------------------------

std::vector<int> degeneracy_word(const std::vector<int>& eta) {
    std::vector<int> word;
    for (int k = static_cast<int>(eta.size()) - 2; k >= 0; --k)
        if (eta[k] == eta[k + 1]) word.push_back(k);
    return word;  // decreasing
}

std::vector<int> eta_from_word(const std::vector<int>& word, int value_dim) {
    std::vector<char> rep(value_dim, 0);
    for (int j : word) rep[j] = 1;
    std::vector<int> eta(value_dim + 1);
    eta[0] = 0;
    for (int k = 1; k <= value_dim; ++k) eta[k] = eta[k - 1] + (rep[k - 1] ? 0 : 1);
    return eta;
}

std::string SimplicialValue::key() const {
    std::string s = "s[";
    auto w = degeneracy_word(eta);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w[i]);
    }
    s += "]:" + std::to_string(ref.dim) + ":" + std::to_string(ref.idx);
    return s;
}

// ---- simplicial sets ------------------------------------------------------------

long long SimplicialSet::total_simplices(int n) const {
    // surjections [n] ->> [m] are choices of n-m repeat positions among n
    auto binom = [](int a, int b) -> long long {
        if (b < 0 || b > a) return 0;
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    long long total = 0;
    for (int m = 0; m <= std::min(n, dim()); ++m) total += binom(n, n - m) * count(m);
    return total;
}

SimplicialValue SimplicialSet::value_of(SimplexRef s) const {
    SimplicialValue v;
    v.ref = s;
    v.eta.resize(s.dim + 1);
    std::iota(v.eta.begin(), v.eta.end(), 0);
    return v;
}

SimplicialValue SimplicialSet::face_of_value(const SimplicialValue& v, int k) const {
    const int n = v.dim();
    if (n == 0) throw PreconditionError("face of a 0-simplex");
    std::vector<int> rest;
    rest.reserve(n);
    for (int i = 0; i <= n; ++i)
        if (i != k) rest.push_back(v.eta[i]);
    const int x = v.eta[k];
    bool lost = true;
    for (int e : rest)
        if (e == x) {
            lost = false;
            break;
        }
    if (!lost) {
        SimplicialValue out;
        out.eta = std::move(rest);
        out.ref = v.ref;
        return out;
    }
    for (int& e : rest)
        if (e > x) --e;
    const SimplicialValue& fv = faces[v.ref.dim][v.ref.idx][x];
    SimplicialValue out;
    out.ref = fv.ref;
    out.eta.resize(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) out.eta[i] = fv.eta[rest[i]];
    return out;
}

SimplicialValue SimplicialSet::degeneracy_of_value(const SimplicialValue& v, int i) const {
    SimplicialValue out = v;
    out.eta.insert(out.eta.begin() + i, v.eta[i]);
    return out;
}

int SimplicialSet::index_of(int d, const std::string& id) const {
    if (d < 0 || d > dim()) return -1;
    for (std::size_t i = 0; i < ids[d].size(); ++i)
        if (ids[d][i] == id) return static_cast<int>(i);
    return -1;
}

ValidationReport SimplicialSet::validate() const {
    ValidationReport rep;
    rep.subject = "simplicial set";
    for (int n = 1; n <= dim(); ++n)
        for (int i = 0; i < count(n); ++i) {
            if (static_cast<int>(faces[n][i].size()) != n + 1) {
                rep.add("faces-missing", ids[n][i] + " does not have n+1 faces");
                continue;
            }
            for (int k = 0; k <= n; ++k) {
                const SimplicialValue& f = faces[n][i][k];
                if (f.dim() != n - 1) rep.add("face-dim", "face " + std::to_string(k) + " of " + ids[n][i]);
                if (f.ref.dim < 0 || f.ref.dim > dim() || f.ref.idx < 0 || f.ref.idx >= count(f.ref.dim))
                    rep.add("face-ref", "dangling face reference on " + ids[n][i]);
                // eta must be a monotone surjection onto [ref.dim]
                if (f.eta.empty() || f.eta.front() != 0 || f.eta.back() != f.ref.dim)
                    rep.add("face-eta", "degeneracy word of face " + std::to_string(k) + " of " + ids[n][i]);
                for (std::size_t t = 1; t < f.eta.size(); ++t)
                    if (f.eta[t] != f.eta[t - 1] && f.eta[t] != f.eta[t - 1] + 1)
                        rep.add("face-eta", "non-surjective word on " + ids[n][i]);
            }
        }
    if (!rep.clean()) return rep;
    for (int n = 2; n <= dim(); ++n)
        for (int i = 0; i < count(n); ++i) {
            SimplicialValue v = value_of({n, i});
            for (int jj = 1; jj <= n; ++jj)
                for (int ii = 0; ii < jj; ++ii) {
                    SimplicialValue a = face_of_value(face_of_value(v, jj), ii);
                    SimplicialValue b = face_of_value(face_of_value(v, ii), jj - 1);
                    if (!(a == b))
                        rep.add("simplicial-identity",
                                "d_" + std::to_string(ii) + " d_" + std::to_string(jj) + " on " + ids[n][i]);
                }
        }
    return rep;
}

std::vector<int> SimplicialSet::f_vector() const {
    std::vector<int> f;
    for (int n = 0; n <= dim(); ++n) f.push_back(count(n));
    return f;
}

long long SimplicialSet::euler_characteristic() const {
    long long chi = 0;
    for (int n = 0; n <= dim(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(count(n));
    return chi;
}

// ---- maps ------------------------------------------------------------------------

SimplicialValue SimplicialMap::apply(const SimplicialValue& v) const {
    const SimplicialValue& img = image[v.ref.dim][v.ref.idx];
    SimplicialValue out;
    out.ref = img.ref;
    out.eta.resize(v.eta.size());
    for (std::size_t i = 0; i < v.eta.size(); ++i) out.eta[i] = img.eta[v.eta[i]];
    return out;
}

std::string SimplicialMap::key() const {
    std::string s;
    for (const auto& dimimgs : image)
        for (const auto& v : dimimgs) s += v.key() + ";";
    return s;
}

ValidationReport check_simplicial_map(const SimplicialMap& f) {
    ValidationReport rep;
    rep.subject = "simplicial map";
    const SimplicialSet& k = *f.source;
    if (static_cast<int>(f.image.size()) < k.dim() + 1) {
        rep.add("shape", "missing image assignments");
        return rep;
    }
    for (int n = 0; n <= k.dim(); ++n) {
        if (static_cast<int>(f.image[n].size()) != k.count(n)) {
            rep.add("shape", "image count mismatch in dimension " + std::to_string(n));
            return rep;
        }
        for (int i = 0; i < k.count(n); ++i)
            if (f.image[n][i].dim() != n)
                rep.add("dimension", "image of " + k.ids[n][i] + " has wrong dimension");
    }
    if (!rep.clean()) return rep;
    for (int n = 1; n <= k.dim(); ++n)
        for (int i = 0; i < k.count(n); ++i)
            for (int kk = 0; kk <= n; ++kk) {
                SimplicialValue lhs = f.target->face_of_value(f.image[n][i], kk);
                SimplicialValue rhs = f.apply(k.face(SimplexRef{n, i}, kk));
                if (!(lhs == rhs))
                    rep.add("face", "d_" + std::to_string(kk) + " of " + k.ids[n][i] +
                                        " does not commute");
            }
    return rep;
}

SimplicialMap identity_simplicial_map(const SSPtr& k) {
    SimplicialMap f;
    f.source = k;
    f.target = k;
    f.image.resize(k->dim() + 1);
    for (int n = 0; n <= k->dim(); ++n)
        for (int i = 0; i < k->count(n); ++i) f.image[n].push_back(k->value_of({n, i}));
    return f;
}

SimplicialMap compose_simplicial_maps(const SimplicialMap& g, const SimplicialMap& f) {
    SimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    h.image.resize(f.image.size());
    for (std::size_t n = 0; n < f.image.size(); ++n)
        for (const auto& v : f.image[n]) h.image[n].push_back(g.apply(v));
    return h;
}

bool is_simplicial_iso(const SimplicialMap& f) {
    const SimplicialSet& k = *f.source;
    const SimplicialSet& z = *f.target;
    if (k.dim() != z.dim()) return false;
    for (int n = 0; n <= k.dim(); ++n) {
        if (k.count(n) != z.count(n)) return false;
        std::vector<char> hit(z.count(n), 0);
        for (int i = 0; i < k.count(n); ++i) {
            const SimplicialValue& v = f.image[n][i];
            if (!v.nondegenerate()) return false;
            if (hit[v.ref.idx]) return false;
            hit[v.ref.idx] = 1;
        }
    }
    return check_simplicial_map(f).clean();
}

// ---- nerve ----------------------------------------------------------------------

void ensure_nerve_admissible(const FinCategory& c) {
    try {
        degree_function(c);
    } catch (const NotLeftFinite& e) {
        throw LoopyCategory(std::string("nerve undefined: ") + e.what());
    }
}

int NerveResult::find_chain(int n, const std::vector<int>& chain) const {
    for (std::size_t i = 0; i < chains[n].size(); ++i)
        if (chains[n][i] == chain) return static_cast<int>(i);
    return -1;
}

SimplicialValue NerveResult::value_of_chain(const std::vector<int>& data, bool is_vertex) const {
    if (is_vertex) return ss->value_of({0, data[0]});
    const FinCategory& c = *category;
    std::vector<int> eta(data.size() + 1);
    std::vector<int> core;
    eta[0] = 0;
    for (std::size_t k = 0; k < data.size(); ++k) {
        bool ident = c.is_identity(data[k]);
        eta[k + 1] = eta[k] + (ident ? 0 : 1);
        if (!ident) core.push_back(data[k]);
    }
    SimplicialValue v;
    v.eta = std::move(eta);
    if (core.empty()) {
        v.ref = {0, c.morphisms[data[0]].src};
    } else {
        int idx = find_chain(static_cast<int>(core.size()), core);
        if (idx < 0) throw PreconditionError("value_of_chain: chain not found");
        v.ref = {static_cast<int>(core.size()), idx};
    }
    return v;
}

NerveResult nerve(const CatPtr& c) {
    ensure_nerve_admissible(*c);
    NerveResult out;
    out.category = c;
    auto ss = std::make_shared<SimplicialSet>();
    // dimension 0: objects
    ss->ids.emplace_back(c->objects);
    ss->faces.emplace_back();  // unused slot for dim 0
    out.chains.emplace_back();
    for (std::size_t o = 0; o < c->num_objects(); ++o)
        out.chains[0].push_back({static_cast<int>(o)});
    // higher chains of composable non-identity morphisms
    for (int n = 1;; ++n) {
        std::vector<std::vector<int>> level;
        std::vector<std::string> level_ids;
        if (n == 1) {
            for (std::size_t m = 0; m < c->num_morphisms(); ++m)
                if (!c->is_identity(static_cast<int>(m))) {
                    level.push_back({static_cast<int>(m)});
                    level_ids.push_back(c->morphisms[m].id);
                }
        } else {
            for (std::size_t i = 0; i < out.chains[n - 1].size(); ++i)
                for (std::size_t m = 0; m < c->num_morphisms(); ++m) {
                    if (c->is_identity(static_cast<int>(m))) continue;
                    const auto& prev = out.chains[n - 1][i];
                    if (c->morphisms[m].src != c->morphisms[prev.back()].tgt) continue;
                    auto chain = prev;
                    chain.push_back(static_cast<int>(m));
                    level.push_back(std::move(chain));
                    level_ids.push_back(ss->ids[n - 1][i] + "|" + c->morphisms[m].id);
                }
        }
        if (level.empty()) break;
        out.chains.push_back(std::move(level));
        ss->ids.push_back(std::move(level_ids));
        ss->faces.emplace_back();
    }
    out.ss = ss;  // chains filled; now faces (find_chain needs out.chains)
    auto mutable_ss = std::const_pointer_cast<SimplicialSet>(ss);
    for (int n = 1; n <= mutable_ss->dim(); ++n) {
        mutable_ss->faces[n].resize(mutable_ss->count(n));
        for (int i = 0; i < mutable_ss->count(n); ++i) {
            const auto& chain = out.chains[n][i];
            for (int k = 0; k <= n; ++k) {
                std::vector<int> fc;
                if (k == 0)
                    fc.assign(chain.begin() + 1, chain.end());
                else if (k == n)
                    fc.assign(chain.begin(), chain.end() - 1);
                else {
                    fc.assign(chain.begin(), chain.end());
                    int comp = c->compose(fc[k], fc[k - 1]);
                    fc[k - 1] = comp;
                    fc.erase(fc.begin() + k);
                }
                SimplicialValue v;
                if (n == 1) {
                    int obj = (k == 0) ? c->morphisms[chain[0]].tgt : c->morphisms[chain[0]].src;
                    v = mutable_ss->value_of({0, obj});
                } else {
                    // in a loop-free category a composite of non-identity maps is
                    // never an identity, so the face chain is nondegenerate
                    int idx = out.find_chain(n - 1, fc);
                    if (idx < 0) throw PreconditionError("nerve: face chain missing");
                    v = mutable_ss->value_of({n - 1, idx});
                }
                mutable_ss->faces[n][i].push_back(std::move(v));
            }
        }
    }
    return out;
}

SimplicialMap nerve_map(const Functor& f, const NerveResult& src, const NerveResult& tgt) {
    SimplicialMap out;
    out.source = src.ss;
    out.target = tgt.ss;
    out.image.resize(src.ss->dim() + 1);
    for (int i = 0; i < src.ss->count(0); ++i)
        out.image[0].push_back(tgt.ss->value_of({0, f.omap[src.chains[0][i][0]]}));
    for (int n = 1; n <= src.ss->dim(); ++n)
        for (int i = 0; i < src.ss->count(n); ++i) {
            std::vector<int> img;
            for (int m : src.chains[n][i]) img.push_back(f.mmap[m]);
            out.image[n].push_back(tgt.value_of_chain(img, false));
        }
    return out;
}

long long nerve_total_simplices(const FinCategory& c, int n) {
    std::vector<long long> dp(c.num_objects(), 1);
    for (int step = 0; step < n; ++step) {
        std::vector<long long> next(c.num_objects(), 0);
        for (std::size_t m = 0; m < c.num_morphisms(); ++m)
            next[c.morphisms[m].tgt] += dp[c.morphisms[m].src];
        dp = std::move(next);
    }
    long long total = 0;
    for (long long v : dp) total += v;
    return total;
}

// ---- products ---------------------------------------------------------------------

namespace {
std::string value_id(const SimplicialSet& ss, const SimplicialValue& v) {
    auto w = degeneracy_word(v.eta);
    std::string s;
    if (!w.empty()) {
        s += "s";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
        s += ".";
    }
    return s + ss.ids[v.ref.dim][v.ref.idx];
}
}  // namespace

SimplicialValue ProductSS::normalize(const SimplicialValue& a, const SimplicialValue& b) const {
    const int n = a.dim();
    if (b.dim() != n) throw PreconditionError("normalize: dimension mismatch");
    std::vector<char> common(std::max(0, n), 0);
    for (int k = 0; k < n; ++k)
        common[k] = (a.eta[k] == a.eta[k + 1] && b.eta[k] == b.eta[k + 1]) ? 1 : 0;
    std::vector<int> kept{0};
    for (int k = 1; k <= n; ++k)
        if (!common[k - 1]) kept.push_back(k);
    SimplicialValue sa, sb;
    for (int k : kept) {
        sa.eta.push_back(a.eta[k]);
        sb.eta.push_back(b.eta[k]);
    }
    sa.ref = a.ref;
    sb.ref = b.ref;
    std::string key = sa.key() + "*" + sb.key();
    auto it = lookup_.find(key);
    if (it == lookup_.end()) throw PreconditionError("normalize: missing product simplex " + key);
    SimplicialValue out;
    out.ref = it->second;
    out.eta.resize(n + 1);
    int drop = 0;
    out.eta[0] = 0;
    for (int k = 1; k <= n; ++k) {
        if (common[k - 1]) ++drop;
        out.eta[k] = k - drop;
    }
    return out;
}

ProductSS simplicial_product(const SSPtr& kp, const SSPtr& lp) {
    const SimplicialSet& k = *kp;
    const SimplicialSet& l = *lp;
    ProductSS out;
    out.left = kp;
    out.right = lp;
    auto ss = std::make_shared<SimplicialSet>();
    const int maxdim = (k.dim() < 0 || l.dim() < 0) ? -1 : k.dim() + l.dim();
    for (int n = 0; n <= maxdim; ++n) {
        std::vector<std::string> level_ids;
        std::vector<std::pair<SimplicialValue, SimplicialValue>> level_parts;
        for (int p = 0; p <= std::min(n, k.dim()); ++p)
            for (int si = 0; si < k.count(p); ++si)
                for (int q = 0; q <= std::min(n, l.dim()); ++q) {
                    if ((n - p) + (n - q) > n) continue;
                    for (int ti = 0; ti < l.count(q); ++ti) {
                        // choose disjoint repeat sets R1 (size n-p) and R2 (size n-q)
                        const int bits = n;  // positions 0..n-1
                        for (int r1 = 0; r1 < (1 << bits); ++r1) {
                            if (__builtin_popcount(static_cast<unsigned>(r1)) != n - p) continue;
                            for (int r2 = 0; r2 < (1 << bits); ++r2) {
                                if (__builtin_popcount(static_cast<unsigned>(r2)) != n - q) continue;
                                if (r1 & r2) continue;
                                SimplicialValue va, vb;
                                va.ref = {p, si};
                                vb.ref = {q, ti};
                                va.eta.resize(n + 1);
                                vb.eta.resize(n + 1);
                                va.eta[0] = vb.eta[0] = 0;
                                for (int t = 1; t <= n; ++t) {
                                    va.eta[t] = va.eta[t - 1] + ((r1 >> (t - 1)) & 1 ? 0 : 1);
                                    vb.eta[t] = vb.eta[t - 1] + ((r2 >> (t - 1)) & 1 ? 0 : 1);
                                }
                                level_parts.emplace_back(va, vb);
                                level_ids.push_back(value_id(k, va) + "x" + value_id(l, vb));
                            }
                        }
                    }
                }
        if (level_ids.empty()) break;
        ss->ids.push_back(std::move(level_ids));
        ss->faces.emplace_back();
        out.parts.push_back(std::move(level_parts));
    }
    for (int n = 0; n < static_cast<int>(out.parts.size()); ++n)
        for (int i = 0; i < static_cast<int>(out.parts[n].size()); ++i)
            out.lookup_[out.parts[n][i].first.key() + "*" + out.parts[n][i].second.key()] =
                SimplexRef{n, i};
    out.ss = ss;
    auto mutable_ss = std::const_pointer_cast<SimplicialSet>(ss);
    for (int n = 1; n <= mutable_ss->dim(); ++n) {
        mutable_ss->faces[n].resize(mutable_ss->count(n));
        for (int i = 0; i < mutable_ss->count(n); ++i) {
            const auto& [va, vb] = out.parts[n][i];
            for (int kk = 0; kk <= n; ++kk)
                mutable_ss->faces[n][i].push_back(
                    out.normalize(k.face_of_value(va, kk), l.face_of_value(vb, kk)));
        }
    }
    return out;
}

SimplicialMap product_map(const SimplicialMap& f, const SimplicialMap& g, const ProductSS& src,
                          const ProductSS& tgt) {
    SimplicialMap out;
    out.source = src.ss;
    out.target = tgt.ss;
    out.image.resize(src.ss->dim() + 1);
    for (int n = 0; n <= src.ss->dim(); ++n)
        for (int i = 0; i < src.ss->count(n); ++i) {
            const auto& [va, vb] = src.parts[n][i];
            out.image[n].push_back(tgt.normalize(f.apply(va), g.apply(vb)));
        }
    return out;
}

SSPtr standard_simplex(int n) {
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i <= n; ++i) elems.push_back(std::to_string(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) pairs.emplace_back(elems[i], elems[j]);
    return nerve(poset_category(elems, pairs)).ss;
}

// ---- chains and homology --------------------------------------------------------------

ChainComplex normalized_chains(const SimplicialSet& k) {
    ChainComplex c;
    for (int n = 0; n <= k.dim(); ++n) c.dims.push_back(k.count(n));
    c.boundary.resize(std::max(0, k.dim() + 1));
    if (k.dim() >= 0) c.boundary[0] = IntMat(0, k.count(0));
    for (int n = 1; n <= k.dim(); ++n) {
        IntMat m(k.count(n - 1), k.count(n));
        for (int i = 0; i < k.count(n); ++i)
            for (int kk = 0; kk <= n; ++kk) {
                const SimplicialValue& f = k.face(SimplexRef{n, i}, kk);
                if (!f.nondegenerate()) continue;
                m.at(f.ref.idx, i) += (kk % 2 == 0) ? 1 : -1;
            }
        c.boundary[n] = std::move(m);
    }
    return c;
}

ValidationReport ChainComplex::validate() const {
    ValidationReport rep;
    rep.subject = "chain complex";
    for (std::size_t n = 1; n + 1 < boundary.size(); ++n) {
        IntMat prod = mat_mul(boundary[n], boundary[n + 1]);
        for (const auto& e : prod.a)
            if (e != 0) {
                rep.add("dd", "boundary squared nonzero in degree " + std::to_string(n + 1));
                break;
            }
    }
    return rep;
}

bool HomologyResult::is_point() const {
    if (betti.empty() || betti[0] != 1) return false;
    for (std::size_t n = 1; n < betti.size(); ++n)
        if (betti[n] != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyResult::is_zero() const {
    for (int b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologyResult::brief() const {
    std::string s = "[";
    for (std::size_t n = 0; n < betti.size(); ++n) {
        if (n) s += ", ";
        s += std::to_string(betti[n]);
        for (const auto& t : torsion[n]) s += "+Z/" + t.get_str();
    }
    return s + "]";
}

HomologyResult homology(const ChainComplex& c) {
    HomologyResult h;
    const int top = static_cast<int>(c.dims.size()) - 1;
    std::vector<int> rank(top + 2, 0);
    std::vector<std::vector<mpz_class>> tor(top + 2);
    for (int n = 1; n <= top; ++n) {
        SmithResult s = smith_normal_form(c.boundary[n]);
        rank[n] = s.rank();
        for (const auto& d : s.diagonal())
            if (d > 1) tor[n].push_back(d);
    }
    for (int n = 0; n <= top; ++n) {
        h.betti.push_back(c.dims[n] - rank[n] - rank[n + 1]);
        std::vector<mpz_class> t = tor[n + 1];
        std::sort(t.begin(), t.end());
        h.torsion.push_back(std::move(t));
    }
    return h;
}

HomologyResult homology_of(const SimplicialSet& k) { return homology(normalized_chains(k)); }

std::vector<int> rational_betti(const ChainComplex& c) {
    const int top = static_cast<int>(c.dims.size()) - 1;
    std::vector<int> rank(top + 2, 0);
    for (int n = 1; n <= top; ++n) rank[n] = bareiss_rank(c.boundary[n]);
    std::vector<int> betti;
    for (int n = 0; n <= top; ++n) betti.push_back(c.dims[n] - rank[n] - rank[n + 1]);
    return betti;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> component_labels(const SimplicialSet& k) {
    UnionFind uf(k.count(0));
    for (int i = 0; i < k.count(1); ++i) {
        const SimplicialValue& d0 = k.face(SimplexRef{1, i}, 0);
        const SimplicialValue& d1 = k.face(SimplexRef{1, i}, 1);
        uf.unite(d1.ref.idx, d0.ref.idx);
    }
    std::vector<int> lab(k.count(0));
    for (int i = 0; i < k.count(0); ++i) lab[i] = uf.find(i);
    return lab;
}
}  // namespace

InducedMapResult induced_homology_map(const SimplicialMap& f) {
    InducedMapResult out;
    const SimplicialSet& k = *f.source;
    const SimplicialSet& z = *f.target;
    const int top = std::max(k.dim(), z.dim());
    for (int n = 0; n <= top; ++n) {
        IntMat m(z.count(n), k.count(n));
        for (int i = 0; i < k.count(n); ++i) {
            const SimplicialValue& v = f.image[n][i];
            if (v.nondegenerate()) m.at(v.ref.idx, i) += 1;
        }
        out.chain_map.push_back(std::move(m));
    }
    ChainComplex ck = normalized_chains(k);
    ChainComplex cz = normalized_chains(z);
    out.source = homology(ck);
    out.target = homology(cz);
    auto dim_of = [](const ChainComplex& c, int n) {
        return (n >= 0 && n < static_cast<int>(c.dims.size())) ? c.dims[n] : 0;
    };
    auto bnd = [](const ChainComplex& c, int n) -> std::optional<IntMat> {
        if (n >= 1 && n < static_cast<int>(c.boundary.size())) return c.boundary[n];
        return std::nullopt;
    };
    // mapping cone: C_n = K_{n-1} (+) Z_n with d(a,b) = (-d a, f a + d b)
    ChainComplex cone;
    const int cone_top = top + 1;
    for (int n = 0; n <= cone_top; ++n) cone.dims.push_back(dim_of(ck, n - 1) + dim_of(cz, n));
    cone.boundary.resize(cone_top + 1);
    cone.boundary[0] = IntMat(0, cone.dims[0]);
    for (int n = 1; n <= cone_top; ++n) {
        int rk = dim_of(ck, n - 2), rz = dim_of(cz, n - 1);
        int cck = dim_of(ck, n - 1), ccz = dim_of(cz, n);
        IntMat m(rk + rz, cck + ccz);
        if (auto b = bnd(ck, n - 1))
            for (int i = 0; i < b->rows; ++i)
                for (int j = 0; j < b->cols; ++j) m.at(i, j) = -b->at(i, j);
        if (n - 1 <= top && n - 1 >= 0) {
            const IntMat& cm = out.chain_map[n - 1];
            for (int i = 0; i < cm.rows; ++i)
                for (int j = 0; j < cm.cols; ++j) m.at(rk + i, j) = cm.at(i, j);
        }
        if (auto b = bnd(cz, n))
            for (int i = 0; i < b->rows; ++i)
                for (int j = 0; j < b->cols; ++j) m.at(rk + i, cck + j) = b->at(i, j);
        cone.boundary[n] = std::move(m);
    }
    out.cone = homology(cone);
    // pi0
    auto lk = component_labels(k);
    auto lz = component_labels(z);
    std::map<int, int> img;  // k-component -> z-component
    bool pi0_ok = true;
    for (int i = 0; i < k.count(0); ++i) {
        int zc = lz[f.image[0][i].ref.idx];
        auto it = img.find(lk[i]);
        if (it == img.end())
            img[lk[i]] = zc;
        else if (it->second != zc)
            pi0_ok = false;  // cannot happen for a simplicial map; kept as a guard
    }
    std::set<int> zcomps, hit;
    for (int i = 0; i < z.count(0); ++i) zcomps.insert(lz[i]);
    for (auto& [kc, zc] : img) {
        if (hit.count(zc)) pi0_ok = false;
        hit.insert(zc);
    }
    if (hit.size() != zcomps.size()) pi0_ok = false;
    out.pi0_bijective = pi0_ok;
    auto cone_zero_at = [&](int n) {
        if (n < 0 || n >= static_cast<int>(out.cone.betti.size())) return true;
        return out.cone.betti[n] == 0 && out.cone.torsion[n].empty();
    };
    for (int n = 0; n <= top; ++n)
        out.iso_in_degree.push_back(cone_zero_at(n) && cone_zero_at(n + 1));
    out.homology_equivalence = out.cone.is_zero() && pi0_ok;
    return out;
}

bool is_homology_equivalence(const SimplicialMap& f) {
    return induced_homology_map(f).homology_equivalence;
}

// ---- map enumeration ----------------------------------------------------------------

std::vector<SimplicialValue> all_values(const SimplicialSet& z, int n) {
    std::vector<SimplicialValue> out;
    for (int m = 0; m <= std::min(n, z.dim()); ++m) {
        // repeat subsets of {0..n-1} of size n-m, in increasing mask order
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != n - m) continue;
            for (int idx = 0; idx < z.count(m); ++idx) {
                SimplicialValue v;
                v.ref = {m, idx};
                v.eta.resize(n + 1);
                v.eta[0] = 0;
                for (int t = 1; t <= n; ++t)
                    v.eta[t] = v.eta[t - 1] + ((mask >> (t - 1)) & 1 ? 0 : 1);
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

std::vector<SimplicialMap> enumerate_simplicial_maps(const SSPtr& kp, const SSPtr& zp, Budget& budget,
                                                     int max_dim) {
    const SimplicialSet& k = *kp;
    const SimplicialSet& z = *zp;
    const int nd = (max_dim >= 0) ? std::min(max_dim, k.dim()) : k.dim();
    std::vector<SimplicialMap> out;
    SimplicialMap f;
    f.source = kp;
    f.target = zp;
    f.image.assign(std::max(0, nd + 1), {});

    std::vector<std::vector<SimplicialValue>> cands(nd + 1);
    for (int n = 0; n <= nd; ++n) cands[n] = all_values(z, n);

    std::function<void(int, int)> rec = [&](int n, int i) {
        budget.tick();
        if (n > nd) {
            out.push_back(f);
            return;
        }
        if (i == k.count(n)) {
            rec(n + 1, 0);
            return;
        }
        for (const SimplicialValue& cand : cands[n]) {
            bool ok = true;
            for (int kk = 0; kk <= n && ok && n >= 1; ++kk) {
                SimplicialValue lhs = z.face_of_value(cand, kk);
                SimplicialValue rhs = f.apply(k.face(SimplexRef{n, i}, kk));
                if (!(lhs == rhs)) ok = false;
            }
            if (!ok) continue;
            f.image[n].push_back(cand);
            rec(n, i + 1);
            f.image[n].pop_back();
        }
    };
    if (nd < 0)
        out.push_back(f);
    else
        rec(0, 0);
    return out;
}

}  // namespace catlim
