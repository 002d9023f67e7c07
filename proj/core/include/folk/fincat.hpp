#ifndef FOLK_FINCAT_HPP
#define FOLK_FINCAT_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace folk {

struct Arrow {
  std::string name;
  int src = -1;
  int tgt = -1;
};

class FinCat;
using CatPtr = std::shared_ptr<const FinCat>;

/// A finite category given by a total composition table. Immutable once
/// built; all higher layers share instances through CatPtr and compare
/// categories by pointer identity. Product categories compose
/// componentwise through a view on the factors instead of a dense table.
class FinCat {
public:
  FinCat(std::string name, std::vector<std::string> objects,
         std::vector<Arrow> arrows, std::vector<int> identity,
         std::vector<int> comp);

  struct ProductView {
    CatPtr a;
    CatPtr b;
  };
  FinCat(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows,
         std::vector<int> identity, ProductView view);

  const std::string& name() const { return name_; }
  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& object_name(int x) const { return objects_[x]; }
  const Arrow& arrow(int a) const { return arrows_[a]; }

  int identity(int obj) const { return identity_[obj]; }
  bool is_identity(int a) const;
  int src(int a) const { return arrows_[a].src; }
  int tgt(int a) const { return arrows_[a].tgt; }

  bool composable(int g, int f) const { return arrows_[f].tgt == arrows_[g].src; }
  /// g after f; only defined when composable(g, f).
  int compose(int g, int f) const {
    if (view_) {
      if (!composable(g, f)) return -1;
      int nb = view_->b->num_arrows();
      return view_->a->compose(g / nb, f / nb) * nb + view_->b->compose(g % nb, f % nb);
    }
    return comp_[static_cast<size_t>(g) * arrows_.size() + f];
  }
  int compose_raw(int g, int f) const { return compose(g, f); }

  int object_index(const std::string& n) const;  // -1 if absent
  int arrow_index(const std::string& n) const;   // -1 if absent

  /// -1 when the arrow has no two-sided inverse.
  int inverse(int a) const {
    if (view_) {
      int nb = view_->b->num_arrows();
      int ia = view_->a->inverse(a / nb), ib = view_->b->inverse(a % nb);
      return (ia < 0 || ib < 0) ? -1 : ia * nb + ib;
    }
    return inverse_[a];
  }
  bool is_iso(int a) const { return inverse(a) >= 0; }

  std::vector<int> hom(int x, int y) const;
  /// The unique arrow x -> y; asserts the hom-set is a singleton.
  int unique_arrow(int x, int y) const;
  /// True when every hom-set has exactly one element.
  bool is_indiscrete() const;

private:
  std::string name_;
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identity_;
  std::vector<int> comp_;
  std::vector<int> inverse_;
  std::optional<ProductView> view_;
  std::map<std::string, int> obj_index_;
  std::map<std::string, int> arr_index_;
};

struct ValidationIssue {
  std::string law;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool pass() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate(const FinCat& c);

/// A functor between finite categories, stored as total index maps.
/// Equality is extensional: same dom/cod instances and equal maps.
struct FunctorMap {
  CatPtr dom;
  CatPtr cod;
  std::vector<int> obj_map;
  std::vector<int> arr_map;
  std::string name;

  int obj(int x) const { return obj_map[x]; }
  int arr(int a) const { return arr_map[a]; }
};

bool operator==(const FunctorMap& a, const FunctorMap& b);
inline bool operator!=(const FunctorMap& a, const FunctorMap& b) { return !(a == b); }

FunctorMap identity_functor(CatPtr c);
/// g after f; requires f.cod == g.dom (same instance).
FunctorMap compose(const FunctorMap& g, const FunctorMap& f);
ValidationReport validate(const FunctorMap& f);

struct NatTrans {
  FunctorMap source_fun;
  FunctorMap target_fun;
  std::vector<int> components;  // object of dom -> arrow of cod
  std::string name;
};

bool operator==(const NatTrans& a, const NatTrans& b);
ValidationReport validate(const NatTrans& n);

struct Cospan {
  FunctorMap left;   // a -> c
  FunctorMap right;  // b -> c
};

struct Span {
  FunctorMap left;   // c -> a
  FunctorMap right;  // c -> b
};

/// A commuting square: right ∘ top = bottom ∘ left.
struct Square {
  FunctorMap top;     // a0 -> a1
  FunctorMap right;   // a1 -> a3
  FunctorMap left;    // a0 -> a2
  FunctorMap bottom;  // a2 -> a3
};

bool commutes(const Square& s);

struct Product {
  CatPtr cat;
  CatPtr a;
  CatPtr b;
  FunctorMap proj1;
  FunctorMap proj2;

  int obj(int x, int y) const { return x * b->num_objects() + y; }
  int arr(int u, int w) const { return u * b->num_arrows() + w; }
  int obj1(int o) const { return o / b->num_objects(); }
  int obj2(int o) const { return o % b->num_objects(); }
  int arr1(int m) const { return m / b->num_arrows(); }
  int arr2(int m) const { return m % b->num_arrows(); }
};

Product product(CatPtr a, CatPtr b);
/// <f,g> : dom f -> a×b for f : X -> a, g : X -> b.
FunctorMap pairing(const Product& p, const FunctorMap& f, const FunctorMap& g);
/// f×g : a×b -> c×d.
FunctorMap product_map(const Product& pab, const Product& pcd, const FunctorMap& f,
                       const FunctorMap& g);

struct Exponential {
  CatPtr cat;        // b^i
  CatPtr exponent;   // i
  CatPtr base;       // b
  std::vector<FunctorMap> objects;  // functors i -> b
  std::vector<NatTrans> arrows;

  int object_index(const FunctorMap& f) const;
  int arrow_index(int src_obj, int tgt_obj, const std::vector<int>& components) const;
};

/// Functor category b^i with natural transformations as arrows.
Exponential exponential_by(CatPtr i, CatPtr b);

struct PullbackCat {
  CatPtr cat;
  FunctorMap to_a;  // projection onto dom(left)
  FunctorMap to_b;  // projection onto dom(right)
  Cospan cospan;
  std::vector<std::pair<int, int>> object_pairs;
  std::vector<std::pair<int, int>> arrow_pairs;

  int object_index(int xa, int xb) const;
  int arrow_index(int ua, int ub) const;
};

PullbackCat pullback(const Cospan& cs);
/// Mediating functor T -> pullback for u : T -> a, w : T -> b with
/// left∘u = right∘w.
FunctorMap pullback_induce(const PullbackCat& pb, const FunctorMap& u, const FunctorMap& w);

/// All functors a -> b in a deterministic order (lexicographic in the
/// object assignment, then in the generator assignment).
std::vector<FunctorMap> enumerate_functors(CatPtr a, CatPtr b);

/// Partial assignment for constrained functor search; -1 entries are free.
struct FunctorConstraint {
  std::vector<int> obj;
  std::vector<int> arr;
};

FunctorConstraint empty_constraint(const FinCat& a);

/// First functor a -> b extending the constraint and satisfying pred
/// (pred may be null), in the deterministic enumeration order.
std::optional<FunctorMap> search_functor(
    CatPtr a, CatPtr b, const FunctorConstraint& constraint,
    const std::function<bool(const FunctorMap&)>& pred = nullptr);

/// All functors extending the constraint, up to limit (0 = no limit).
std::vector<FunctorMap> enumerate_functors_constrained(CatPtr a, CatPtr b,
                                                       const FunctorConstraint& constraint,
                                                       size_t limit = 0);

/// First section of m: a functor n with m∘n = id(cod m), found by
/// backtracking over the fibers of m.
std::optional<FunctorMap> search_section(const FunctorMap& m);

/// Fully faithful and essentially surjective; the non-constructive
/// equivalence check used as an oracle.
bool equivalence_oracle(const FunctorMap& f);
bool fully_faithful(const FunctorMap& f);
bool essentially_surjective(const FunctorMap& f);

bool injective_on_objects_oracle(const FunctorMap& j);
bool surjective_on_objects(const FunctorMap& f);

/// Builds a functor into an indiscrete category from an object map alone.
FunctorMap functor_into_indiscrete(CatPtr dom, CatPtr cod, std::vector<int> obj_map,
                                   std::string name = "");

/// Structural equality up to renaming nothing: same object/arrow names,
/// identities and composition tables. Used by round-trip tests.
bool structurally_equal(const FinCat& a, const FinCat& b);

}  // namespace folk

#endif
