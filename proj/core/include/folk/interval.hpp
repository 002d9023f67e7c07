#ifndef FOLK_INTERVAL_HPP
#define FOLK_INTERVAL_HPP

#include <map>
#include <vector>

#include "folk/fincat.hpp"
#include "folk/report.hpp"

namespace folk {

/// The structured interval in Cat: the free groupoid on 0 -> 1 together
/// with the subdivision object on 0 -> 1 -> 2, all structure functors,
/// and the derived functors obtained from the defining pushout equations.
struct IntervalStructure {
  CatPtr one;  // terminal category
  CatPtr I;    // indiscrete groupoid on {0,1}
  CatPtr S;    // indiscrete groupoid on {0,1,2}
  Product IxI;
  Product IxS;

  FunctorMap i0, i1;  // 1 -> I
  FunctorMap p;       // I -> 1
  FunctorMap v;       // I -> I, swaps the endpoints
  FunctorMap r0, r1, s;  // I -> S
  FunctorMap gul, glr, gur;  // IxI -> I
  FunctorMap ql, qr, w;      // S -> I
  FunctorMap pbar;           // S -> 1
  FunctorMap x;              // IxS -> I

  // Object indices, for readable construction code.
  int o0 = -1, o1 = -1;           // objects of I
  int s0 = -1, s1 = -1, s2 = -1;  // objects of S
};

IntervalStructure build_interval();

/// Memoizing workspace: hands out the cylinder, subdivision and
/// co-cylinder applications of each category exactly once, so functor
/// endpoints can be compared by instance.
class Kit {
public:
  Kit();

  const IntervalStructure& iv() const { return iv_; }
  CatPtr one() const { return iv_.one; }
  CatPtr I() const { return iv_.I; }
  CatPtr S() const { return iv_.S; }

  /// The unique functor a -> 1.
  FunctorMap bang(CatPtr a);
  /// The functor 1 -> a picking the given object.
  FunctorMap pick(CatPtr a, int obj);

  const Product& cyl_product(CatPtr a);
  CatPtr cyl(CatPtr a);
  const Product& sdv_product(CatPtr a);
  CatPtr sdv(CatPtr a);  // a x S
  CatPtr cyl2(CatPtr a) { return cyl(cyl(a)); }

  FunctorMap i0(CatPtr a);
  FunctorMap i1(CatPtr a);
  FunctorMap p(CatPtr a);
  FunctorMap v(CatPtr a);
  FunctorMap r0(CatPtr a);
  FunctorMap r1(CatPtr a);
  FunctorMap s(CatPtr a);
  FunctorMap ql(CatPtr a);
  FunctorMap qr(CatPtr a);
  FunctorMap w(CatPtr a);
  FunctorMap pbar(CatPtr a);  // a x S -> a
  FunctorMap gul(CatPtr a);   // cyl2(a) -> cyl(a)
  FunctorMap glr(CatPtr a);
  FunctorMap gur(CatPtr a);

  FunctorMap cylF(const FunctorMap& f);  // f x I
  FunctorMap sdvF(const FunctorMap& f);  // f x S

  const Exponential& cocyl_exponential(CatPtr a);
  CatPtr cocyl(CatPtr a);
  FunctorMap e0(CatPtr a);
  FunctorMap e1(CatPtr a);
  FunctorMap c(CatPtr a);
  FunctorMap cocylF(const FunctorMap& f);

  /// Transpose across Cyl -| co-Cyl: (a x I -> b)  ->  (a -> b^I).
  FunctorMap adj(const FunctorMap& h);
  FunctorMap adj_inv(const FunctorMap& k);

  /// Memoized functor enumeration.
  const std::vector<FunctorMap>& functors(CatPtr a, CatPtr b);

private:
  IntervalStructure iv_;
  std::map<const FinCat*, Product> cyl_;
  std::map<const FinCat*, Product> sdv_;
  std::map<const FinCat*, Exponential> cocyl_;
  std::map<std::pair<const FinCat*, const FinCat*>, std::vector<FunctorMap>> functors_;
  std::map<const FinCat*, CatPtr> keepalive_;

  void keep(CatPtr c) { keepalive_[c.get()] = c; }
};

/// Mapping cylinder of f : a0 -> a1, realized by the closed hom formula:
/// objects are the tagged disjoint union, hom(w,w') = Hom_a1(|w|,|w'|).
struct MappingCylinder {
  FunctorMap f;
  CatPtr M;
  FunctorMap d0;  // cyl(a0) -> M
  FunctorMap d1;  // a1 -> M

  std::vector<int> obj_kind;  // 0: a0 copy, 1: a1 copy
  std::vector<int> obj_of;    // index into a0 resp. a1 objects
  std::vector<int> left_obj;  // a0 object -> M object
  std::vector<int> right_obj; // a1 object -> M object
  std::vector<int> bar_obj;   // M object -> a1 object |w|
  std::vector<int> beta;      // M arrow -> underlying a1 arrow
  std::vector<int> block_base;  // (src_m, tgt_m) -> first arrow of the block
  std::vector<int> hom_pos;     // a1 arrow -> position within its hom-set

  int arrow_at(int src_m, int tgt_m, int beta_arrow) const {
    return block_base[static_cast<size_t>(src_m) * M->num_objects() + tgt_m] +
           hom_pos[beta_arrow];
  }
};

MappingCylinder mapping_cylinder(Kit& kit, const FunctorMap& f);

/// Mediating functor M -> E for legs (legCyl : cyl(a0) -> E,
/// legCod : a1 -> E) with legCyl∘i0(a0) = legCod∘f.
FunctorMap mc_induce(Kit& kit, const MappingCylinder& mc, const FunctorMap& leg_cyl,
                     const FunctorMap& leg_cod);

/// Mediating functor cyl(M) -> E for legs (legCyl2 : cyl2(a0) -> E,
/// legCylCod : cyl(a1) -> E); uses that Cyl preserves mapping cylinders.
FunctorMap mc_cyl_induce(Kit& kit, const MappingCylinder& mc, const FunctorMap& leg_cyl2,
                         const FunctorMap& leg_cyl_cod);

/// The canonical arrow m_f : M -> cyl(a1).
FunctorMap canonical_m(Kit& kit, const MappingCylinder& mc);

struct MappingCoCylinder {
  FunctorMap f;
  PullbackCat pb;   // over a1 via f and e0(a1)
  FunctorMap d0;    // N -> a0
  FunctorMap d1;    // N -> cocyl(a1)
};

MappingCoCylinder mapping_cocylinder(Kit& kit, const FunctorMap& f);

/// The canonical arrow cocyl(a0) -> N.
FunctorMap cocyl_m(Kit& kit, const MappingCoCylinder& mcc);

/// Mediating functor cyl(a x S) -> E for legs on the two cyl^2 copies
/// (leg_r0 on the r0 part, leg_r1 on the r1 part), agreeing on the glue:
/// leg_r0∘cylF(i1(a)) = leg_r1∘cylF(i0(a)).
FunctorMap sdv_cyl_induce(Kit& kit, CatPtr a, const FunctorMap& leg_r0,
                          const FunctorMap& leg_r1);

/// Exhaustive axiom check of the built structure plus the finite
/// universal-property bijections over the given test family.
Report verify_interval(Kit& kit, const std::vector<CatPtr>& family);

/// Same checks against an arbitrary candidate structure sharing the
/// kit's underlying categories; lets tests sabotage single functors and
/// watch the matching axiom lines fail.
Report verify_interval_structure(Kit& kit, const IntervalStructure& iv,
                                 const std::vector<CatPtr>& family);

/// Pushout bijection test: functors out of S(a) correspond to pairs of
/// functors out of cyl(a) agreeing on the glue.
bool subdivision_pushout_bijection(Kit& kit, CatPtr a, CatPtr t);

/// Bijection test for the mapping cylinder universal property over t.
bool mapping_cylinder_bijection(Kit& kit, const MappingCylinder& mc, CatPtr t);

/// Bijection test for Cyl applied to the mapping cylinder square.
bool cyl_mapping_cylinder_bijection(Kit& kit, const MappingCylinder& mc, CatPtr t);

/// Bijection test for the pullback universal property over t.
bool pullback_bijection(Kit& kit, const PullbackCat& pb, CatPtr t);

}  // namespace folk

#endif
