#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "catlim/common.hpp"

namespace catlim {

// Finite category given by explicit object/morphism tables and a total
// composition table. Values are immutable once built; constructions hand out
// shared_ptr<const FinCategory> so derived categories can reference their
// ingredients safely.
class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

struct Morphism {
    std::string id;
    int src = -1;
    int tgt = -1;
};

class FinCategory {
public:
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> identity;  // object index -> morphism index

    FinCategory() = default;

    int object_index(const std::string& id) const {
        auto it = obj_index_.find(id);
        return it == obj_index_.end() ? -1 : it->second;
    }
    int morphism_index(const std::string& id) const {
        auto it = mor_index_.find(id);
        return it == mor_index_.end() ? -1 : it->second;
    }

    bool composable(int g, int f) const { return morphisms[f].tgt == morphisms[g].src; }

    // g after f; only defined on composable pairs.
    int compose(int g, int f) const;
    std::optional<int> try_compose(int g, int f) const;

    bool is_identity(int m) const { return identity[morphisms[m].src] == m && morphisms[m].src == morphisms[m].tgt; }

    std::size_t num_objects() const { return objects.size(); }
    std::size_t num_morphisms() const { return morphisms.size(); }

    // Morphism indices x -> y, in index order.
    std::vector<int> hom(int x, int y) const;

    // Deterministic structural fingerprint; equal for equal tables.
    bool same_data(const FinCategory& other) const;

private:
    friend class CatBuilder;
    std::unordered_map<std::string, int> obj_index_;
    std::unordered_map<std::string, int> mor_index_;
    std::unordered_map<std::uint64_t, int> compose_;
};

// Incremental builder; freeze() finalizes the lookup tables.
class CatBuilder {
public:
    int add_object(const std::string& id);
    int add_morphism(const std::string& id, int src, int tgt);
    void set_identity(int obj, int mor);
    void set_compose(int g, int f, int gf);
    // Convenience: register an identity morphism "id" string for every object
    // that has none yet, plus the unit composition entries once all morphisms
    // are known (done in freeze()).
    CatPtr freeze();

    FinCategory cat;

private:
    bool frozen_ = false;
};

struct Functor {
    CatPtr src;
    CatPtr tgt;
    std::vector<int> omap;  // source object index  -> target object index
    std::vector<int> mmap;  // source morphism index -> target morphism index

    int on_object(int o) const { return omap[o]; }
    int on_morphism(int m) const { return mmap[m]; }
    std::string key() const;
};

Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& g, const Functor& f);  // g after f
bool functor_equal(const Functor& a, const Functor& b);
bool functor_is_isomorphism(const Functor& f);

struct NatTrans {
    Functor source;  // F
    Functor target;  // G, same src/tgt categories
    std::vector<int> component;  // source object index -> morphism index in target category

    std::string key() const;
};

NatTrans identity_nat_trans(const Functor& f);
// Vertical composite: later after earlier.
NatTrans compose_nat_trans(const NatTrans& later, const NatTrans& earlier);
// Whisker a functor h : D -> E onto eta : F => G (F,G : C -> D), giving h*eta : hF => hG.
NatTrans whisker_left(const Functor& h, const NatTrans& eta);
// Whisker eta : F => G (F,G : C -> D) with h : B -> C, giving eta*h : Fh => Gh.
NatTrans whisker_right(const NatTrans& eta, const Functor& h);

// Cat-valued functor out of a finite base: vertex categories + transition functors.
struct Diagram {
    CatPtr base;
    std::vector<CatPtr> vertex;      // per base object
    std::vector<Functor> transition; // per base morphism
};

Diagram constant_diagram(const CatPtr& base, const CatPtr& value);

// ---- validators ----------------------------------------------------------

ValidationReport validate_category(const FinCategory& c);
ValidationReport check_functor(const Functor& f);
ValidationReport check_nat_trans(const NatTrans& eta);
ValidationReport check_diagram(const Diagram& d);

// ---- constructions -------------------------------------------------------

// Poset category: one morphism x -> y per pair x <= y. order_pairs must be a
// partial order (reflexivity is filled in; transitivity/antisymmetry are
// rejected if violated). Morphism ids are "x<=y".
CatPtr poset_category(const std::vector<std::string>& elements,
                      const std::vector<std::pair<std::string, std::string>>& order_pairs);

struct ProductCategory {
    CatPtr cat;
    CatPtr left, right;
    // object index in product = i * |right objects| + j, morphisms likewise
    int object_pair(int i, int j) const;
    int morphism_pair(int i, int j) const;
    std::pair<int, int> object_factors(int p) const;
    std::pair<int, int> morphism_factors(int p) const;
};
ProductCategory product_category(const CatPtr& c, const CatPtr& d);

struct NaryProductCategory {
    CatPtr cat;
    std::vector<CatPtr> factors;
    int object_tuple(const std::vector<int>& t) const;
    int morphism_tuple(const std::vector<int>& t) const;
    std::vector<int> object_factors(int p) const;
    std::vector<int> morphism_factors(int p) const;
};
NaryProductCategory nary_product_category(const std::vector<CatPtr>& factors);

struct SliceCategory {
    CatPtr cat;
    Functor projection;           // to the ambient category
    std::vector<int> object_mor;  // slice object index -> ambient morphism index
};

// Over category C/b: objects are morphisms into b; object ids reuse the
// ambient morphism ids, morphism ids are "(<obj>><mediator>)".
SliceCategory over_category(const CatPtr& c, int obj);
// Under category b/C and the full subcategory of non-identity maps out of b.
SliceCategory under_category(const CatPtr& c, int obj);
SliceCategory strict_under(const CatPtr& c, int obj);

// Union of under categories for a set of objects of equal degree.
struct UnionUnder {
    SliceCategory le;  // U <= C
    SliceCategory lt;  // U <  C  (full subcategory of non-identity maps)
    Functor inclusion; // lt.cat -> le.cat
};
UnionUnder union_under(const CatPtr& c, const std::vector<int>& objs);

// deg(i) = longest chain of non-identity morphisms starting at i.
std::vector<int> degree_function(const FinCategory& c);  // throws NotLeftFinite

struct Filtration {
    CatPtr cat;        // full subcategory of objects of degree <= n
    Functor inclusion; // into the ambient category
    std::vector<int> object_of_ambient;  // sub object index -> ambient object index
};
Filtration filtration(const CatPtr& c, int n);
std::vector<int> degree_layer(const FinCategory& c, int n);  // ambient object indices of degree == n

// Full subcategory on the given ambient object indices (kept in the given order).
Filtration full_subcategory(const CatPtr& c, const std::vector<int>& objs);

// Comma category F/b for F : C -> D, b in D. Objects are pairs
// (a, phi : F a -> b); ids "(<a>,<phi>)".
struct CommaCategory {
    CatPtr cat;
    Functor projection;              // to the source of F
    std::vector<int> object_a;       // comma object -> source object of F
    std::vector<int> object_phi;     // comma object -> morphism of target(F)
    int find_object(int a, int phi) const;
};
CommaCategory comma_over(const Functor& f, int obj);
// Comma category b/F: objects (a, phi : b -> F a).
CommaCategory comma_under(const Functor& f, int obj);

// Postcomposition functor F/b -> F/b' along lam : b -> b'.
Functor comma_post_functor(const Functor& f, const CommaCategory& at_src,
                           const CommaCategory& at_tgt, int lam);

// ---- small utilities ------------------------------------------------------

std::optional<int> find_initial(const FinCategory& c);
std::optional<int> find_terminal(const FinCategory& c);
bool is_initial(const FinCategory& c, int obj);
bool is_terminal(const FinCategory& c, int obj);

// All functors C -> D in deterministic order (backtracking, budget-guarded).
std::vector<Functor> all_functors(const CatPtr& c, const CatPtr& d, Budget& budget);
// All natural transformations F => G in deterministic order.
std::vector<NatTrans> all_nat_trans(const Functor& f, const Functor& g, Budget& budget);

// Structural equality of underlying tables (ids, maps, composition).
bool same_category_data(const FinCategory& a, const FinCategory& b);
// Reinterpret a functor against structurally equal replacement endpoints.
Functor rebase_functor(const Functor& f, const CatPtr& new_src, const CatPtr& new_tgt);

}  // namespace catlim
