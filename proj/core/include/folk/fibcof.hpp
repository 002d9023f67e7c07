#ifndef FOLK_FIBCOF_HPP
#define FOLK_FIBCOF_HPP

#include <functional>
#include <optional>

#include "folk/homotopy.hpp"
#include "folk/report.hpp"

namespace folk {

struct IsoFibrationResult {
  bool holds = false;
  int witness_obj = -1;   // object of the total category (on failure)
  int witness_iso = -1;   // iso of the base with no lift (on failure)
  std::string describe(const FunctorMap& f) const;
};

/// Pointwise iso-lifting: every isomorphism out of the image of an
/// object lifts to an isomorphism out of that object.
IsoFibrationResult is_isofibration(const FunctorMap& f);

/// A fibration together with a deterministic lift chooser. The chooser
/// is pointwise: it picks, per object of the total category and per
/// isomorphism out of its image, a lifting isomorphism.
struct Cleavage {
  FunctorMap f;
  std::function<int(int obj, int iso)> rule;

  /// Fills the square (g : x -> dom f, h : cyl(x) -> cod f with
  /// f∘g = h∘i0) by the chosen lifts, assembled into a homotopy.
  Homotopy lift(Kit& kit, const FunctorMap& g, const Homotopy& h) const;
};

/// Least lifting isomorphism in arrow order, except that identity
/// components lift to identities.
Cleavage canonical_cleavage(const FunctorMap& f);
/// Deliberately violates the lifting-of-identities condition whenever a
/// non-identity lift exists; fault-injection hook for the verifier.
Cleavage broken_cleavage(const FunctorMap& f);

/// Cleavage invariant suite over a family of test squares drawn from the
/// corpus functors: exact filling, lifting of identities, compatibility
/// of liftings under precomposition.
Report cleavage_invariants(Kit& kit, const Cleavage& cl, const std::vector<FunctorMap>& corpus_functors,
                           int max_squares = 64);

bool is_normally_cloven_fibration(Kit& kit, const FunctorMap& f);

struct CofibrationWitness {
  FunctorMap j;
  MappingCylinder mc;
  FunctorMap r;  // cyl(a1) -> M with r∘cyl(j) = d0 and r∘i0(a1) = d1
};

/// Searches the finite functor space for the retraction witness.
std::optional<CofibrationWitness> is_cofibration(Kit& kit, const FunctorMap& j);

/// Filler k = u∘r for the square (g : a1 -> a2, h : cyl(a0) -> a2 with
/// h∘i0 = g∘j), via the pushout's universal arrow u.
Homotopy cofibration_fill(Kit& kit, const CofibrationWitness& w, const FunctorMap& g,
                          const Homotopy& h);

/// Normally cloven cofibration data: the mapping-cylinder factorization
/// of j, its strong-deformation homotopy, and the criterion lift l with
/// l∘j = j_mc and g_mc∘l = id. The cleavage is u∘h_mc∘cyl(l).
struct NcCofibration {
  FunctorMap j;
  MappingCylinder mc;
  FunctorMap j_mc;  // a0 -> M
  FunctorMap g_mc;  // M -> a1
  Homotopy h_mc;    // cyl(M) -> M
  FunctorMap l;     // a1 -> M, criterion lift

  Homotopy lift(Kit& kit, const FunctorMap& g, const Homotopy& h) const;
};

std::optional<NcCofibration> normally_cloven_cofibration(Kit& kit, const FunctorMap& j);

/// Co-cylinder-side fibration verdict: the canonical arrow into the
/// mapping co-cylinder admits a section (finite search).
bool cocylinder_fibration_verdict(Kit& kit, const FunctorMap& f);

/// Mapping-cylinder factorization of f with the SDR homotopy built from
/// the lower right connection.
struct McFactorization {
  MappingCylinder mc;
  FunctorMap j;   // a0 -> M
  FunctorMap g;   // M -> a1
  Homotopy h;     // cyl(M) -> M, from d1∘g to id, over a1 w.r.t. (g, g)
};

McFactorization mapping_cylinder_factorization(Kit& kit, const FunctorMap& f);

/// The criterion lift for the mapping-cylinder factorization of f,
/// built from the composite homotopy (d1_j ∘ d0_f) + d0_j. fac_j must be
/// the mapping-cylinder factorization of fac_f.j.
FunctorMap criterion_lift_for_factorization(Kit& kit, const McFactorization& fac_f,
                                            const McFactorization& fac_j);

struct ClosureInstance {
  std::string name;
  RetractData retract;
};

/// Composition and retract closure of the four classes over the corpus.
Report closure_checks(Kit& kit, const std::vector<FunctorMap>& corpus_functors,
                      const std::vector<ClosureInstance>& retracts);

}  // namespace folk

#endif
