#ifndef FOLK_MODELSTRUCT_HPP
#define FOLK_MODELSTRUCT_HPP

#include <functional>
#include <optional>

#include "folk/corpus.hpp"
#include "folk/fibcof.hpp"

namespace folk {

enum class FactorMode { MappingCyl, MappingCocyl, CofThenTrivFib, TrivCofThenFib };

std::string to_string(FactorMode m);

/// A factorization certificate: f = g∘j with class witnesses attached
/// per mode; intermediate objects are retained for audit.
struct Factorization {
  FactorMode mode = FactorMode::MappingCyl;
  FunctorMap f, j, g;
  CatPtr mid;

  std::optional<NcCofibration> j_nc;        // j normally cloven (criterion data)
  std::optional<CofibrationWitness> j_cof;  // j plain cofibration witness
  std::optional<SdrCertificate> j_sdr;      // j section of an SDR
  std::optional<SdrRetractionCertificate> g_sdr;  // g an SDR retraction
  bool g_has_cleavage = false;              // canonical cleavage attached to g
  std::optional<EquivalenceCertificate> j_equiv;
  std::optional<EquivalenceCertificate> g_equiv;
  std::vector<std::string> audit;
};

Factorization factor_mapping_cylinder(Kit& kit, const FunctorMap& f);
Factorization factor_mapping_cocylinder(Kit& kit, const FunctorMap& f);
Factorization factor_composite(Kit& kit, const FunctorMap& f, FactorMode mode);
Factorization factor(Kit& kit, const FunctorMap& f, FactorMode mode);

/// Re-validates a factorization: composite equation plus every attached
/// certificate, independently of how it was built.
bool validate_factorization(Kit& kit, const Factorization& fac, std::string* why = nullptr);

struct LiftProblem {
  FunctorMap j;   // a0 -> a1
  FunctorMap f;   // a2 -> a3
  FunctorMap g0;  // a0 -> a2
  FunctorMap g1;  // a1 -> a3, with f∘g0 = g1∘j
};

struct LiftSolution {
  FunctorMap l;  // a1 -> a2
};

bool square_commutes(const LiftProblem& p);
bool fills(const LiftProblem& p, const FunctorMap& l);

/// Independent brute-force filler search over the fibers.
std::optional<FunctorMap> brute_force_fill(const LiftProblem& p);

/// The strong deformation retraction of the canonical arrow m_j for a
/// cofibration j, with the homotopy built from the right connections.
SdrCertificate sdr_of_m(Kit& kit, const CofibrationWitness& w);

/// Lift of a normally cloven fibration against a section of an SDR.
LiftSolution lift_against_sdr(Kit& kit, const LiftProblem& p, const Cleavage& cl_f,
                              const SdrCertificate& sdr_j);

/// Dual: lift of an SDR retraction against a normally cloven cofibration.
LiftSolution dual_lift_against_sdr(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                                   const SdrRetractionCertificate& sdr_f);

/// Lift of a trivial normally cloven fibration against a cofibration,
/// through the covering homotopy extension property. The sdr_m argument
/// is sdr_of_m for the cofibration witness, precomputable across squares.
LiftSolution chep_lift(Kit& kit, const LiftProblem& p, const CofibrationWitness& w_j,
                       const SdrCertificate& sdr_m, const Cleavage& cl_f,
                       const SdrRetractionCertificate& sdr_f);
LiftSolution chep_lift(Kit& kit, const LiftProblem& p, const CofibrationWitness& w_j,
                       const Cleavage& cl_f, const SdrRetractionCertificate& sdr_f);

/// The SDR-retraction data of the canonical arrow into the mapping
/// co-cylinder of a fibration; the dual of sdr_of_m.
struct CocylMData {
  MappingCoCylinder mcc;
  SdrRetractionCertificate sdr;  // of cocyl_m
};
CocylMData cocyl_m_sdr_data(Kit& kit, const FunctorMap& f);

/// Dual: lift of a fibration against a trivial normally cloven
/// cofibration, through the dual extension property.
LiftSolution dual_chep_lift(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                            const SdrCertificate& sdr_j, const CocylMData& md);
LiftSolution dual_chep_lift(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                            const SdrCertificate& sdr_j);

/// Homotopy-lifting filler of an SDR retraction, certifying it as a
/// fibration: the composite (h∘cyl(g)) + (j∘k), collapsed by strictness
/// of left identities.
Homotopy sdr_is_fibration_lift(Kit& kit, const SdrRetractionCertificate& sdr_f,
                               const FunctorMap& g, const Homotopy& k);

/// Dual: homotopy-extension filler of an SDR section, certifying it as a
/// cofibration: (g∘h⁻¹) + (h_square∘cyl(r)), collapsed by strictness of
/// left identities.
Homotopy sdr_section_cofibration_fill(Kit& kit, const SdrCertificate& sdr_j,
                                      const FunctorMap& g, const Homotopy& h);

using CofibrationFiller = std::function<Homotopy(const FunctorMap&, const Homotopy&)>;

/// Cofibration witness for j2∘j1 assembled from fillers for the legs,
/// following the composition proposition; no search.
CofibrationWitness composite_cofibration_witness(Kit& kit, const FunctorMap& j1,
                                                 const FunctorMap& j2,
                                                 const CofibrationFiller& fill1,
                                                 const CofibrationFiller& fill2);

/// Cofibration witness of an SDR section via its explicit filler.
CofibrationWitness sdr_section_cofibration_witness(Kit& kit, const SdrCertificate& sdr_j);

struct OverEquivalence {
  FunctorMap g;   // a1 -> a0 with j0∘g = j1
  Homotopy h_fg;  // f∘g -> id(a1), over a w.r.t. (j1, j1)
  Homotopy h_gf;  // g∘f -> id(a0), over a w.r.t. (j0, j0)
};

/// Dold's theorem, constructively: a homotopy equivalence between
/// fibrations over a base is an over-equivalence.
OverEquivalence dold_fiberwise_inverse(Kit& kit, const FunctorMap& f, const FunctorMap& j0,
                                       const FunctorMap& j1, const EquivalenceCertificate& cert);

/// Trivial fibrations are SDR retractions (Dold, applied over the
/// codomain with the identity as the second fibration).
SdrRetractionCertificate sdr_for_trivial_fibration(Kit& kit, const FunctorMap& f,
                                                   const EquivalenceCertificate& cert);

/// Trivial cofibrations admit SDRs; the dual construction, written out
/// directly: the retraction is patched to be the identity on the image,
/// and the under-homotopy has identity components there.
SdrCertificate sdr_for_trivial_cofibration(Kit& kit, const FunctorMap& j,
                                           const EquivalenceCertificate& cert);

/// Search decisions for the trivial-class characterizations.
bool is_sdr_retraction(Kit& kit, const FunctorMap& f);
bool is_sdr_section(Kit& kit, const FunctorMap& j);

enum class Variant { A, B };

using CleavageProvider = std::function<Cleavage(const FunctorMap&)>;

struct VerifyOptions {
  CleavageProvider cleavage;   // defaults to the canonical cleavage
  size_t max_squares_per_pair = 24;
  size_t max_triangles = 400;
  bool brute_force_confirm = false;
};

/// The seven model-structure conditions, checked over the corpus.
/// Variant A: fibrations normally cloven, cofibrations plain.
/// Variant B: fibrations plain, cofibrations normally cloven.
Report verify_model_axioms(Kit& kit, const Corpus& corpus, Variant variant,
                           const VerifyOptions& opts = {});

}  // namespace folk

#endif
