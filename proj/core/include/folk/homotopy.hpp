#ifndef FOLK_HOMOTOPY_HPP
#define FOLK_HOMOTOPY_HPP

#include <optional>

#include "folk/interval.hpp"

namespace folk {

/// A homotopy is a functor cyl(a0) -> a1, stored with its boundaries.
struct Homotopy {
  FunctorMap carrier;
  CatPtr a0;
  CatPtr a1;
  FunctorMap f0;  // carrier ∘ i0(a0)
  FunctorMap f1;  // carrier ∘ i1(a0)
};

bool operator==(const Homotopy& a, const Homotopy& b);

/// Wraps a carrier, computing and caching the boundaries.
Homotopy make_homotopy(Kit& kit, CatPtr a0, const FunctorMap& carrier);

Homotopy identity_homotopy(Kit& kit, const FunctorMap& f);
Homotopy reverse(Kit& kit, const Homotopy& h);
/// h then k; boundaries must satisfy h.f1 == k.f0. Dispatches to the
/// subdivision route below, or to direct vertical composition of the
/// components on large bases (the two routes agree; tested).
Homotopy hcompose(Kit& kit, const Homotopy& h, const Homotopy& k);
/// The mediating-arrow construction through the subdivision object.
Homotopy hcompose_subdivision(Kit& kit, const Homotopy& h, const Homotopy& k);
/// Vertical composition of the component isomorphisms.
Homotopy hcompose_components(Kit& kit, const Homotopy& h, const Homotopy& k);
/// g1 ∘ h ∘ cyl(g0).
Homotopy whisker(Kit& kit, const FunctorMap& g1, const Homotopy& h, const FunctorMap& g0);
Homotopy whisker_left(Kit& kit, const FunctorMap& g1, const Homotopy& h);
Homotopy whisker_right(Kit& kit, const Homotopy& h, const FunctorMap& g0);

/// The co-cylinder-side form a0 -> cocyl(a1) of h, via the adjunction.
FunctorMap transpose(Kit& kit, const Homotopy& h);
Homotopy transpose_inv(Kit& kit, CatPtr a0, const FunctorMap& k);

/// Component arrow of h at an object of a0: the image of (x, 0 -> 1).
int component(Kit& kit, const Homotopy& h, int x);
/// Builds a homotopy with the given source boundary and components
/// (target boundary is induced); validates the carrier.
Homotopy homotopy_from_components(Kit& kit, const FunctorMap& f0, const std::vector<int>& comps);

struct DoubleHomotopy {
  FunctorMap carrier;  // cyl2(a0) -> a1
  Homotopy h0, h1, h2, h3;
  FunctorMap f0, f1, f2, f3;
};

enum class Connection { UpperLeft, LowerRight, UpperRight };

DoubleHomotopy boundary_of(Kit& kit, CatPtr a0, const FunctorMap& carrier);
DoubleHomotopy connection_double(Kit& kit, const Homotopy& h, Connection which);

/// h under a w.r.t. (j0 : a -> a0, j1 : a -> a1): h ∘ cyl(j0) = j1 ∘ p(a).
bool is_under(Kit& kit, const Homotopy& h, CatPtr a, const FunctorMap& j0, const FunctorMap& j1);
/// h over a w.r.t. (j0 : a0 -> a, j1 : a1 -> a): j1 ∘ h = p(a) ∘ cyl(j0).
bool is_over(Kit& kit, const Homotopy& h, CatPtr a, const FunctorMap& j0, const FunctorMap& j1);

/// j with retraction r and homotopy under a0 from j∘r to the identity.
struct SdrCertificate {
  FunctorMap j;  // a0 -> a1
  FunctorMap r;  // a1 -> a0
  Homotopy h;    // cyl(a1) -> a1, from j∘r to id, under a0 w.r.t. (j, j)
};

bool validate_sdr(Kit& kit, const SdrCertificate& c);

/// f retraction of j with homotopy over a0 from j∘f to the identity;
/// the co-cylinder-side strong deformation retraction data, held in its
/// cylinder-side transposed form.
struct SdrRetractionCertificate {
  FunctorMap f;  // a1 -> a0
  FunctorMap j;  // a0 -> a1, section
  Homotopy h;    // cyl(a1) -> a1, from j∘f to id, over a0 w.r.t. (f, f)
};

bool validate_sdr_retraction(Kit& kit, const SdrRetractionCertificate& c);

struct EquivalenceCertificate {
  FunctorMap f;
  FunctorMap f_inv;
  Homotopy h_left;   // f_inv ∘ f -> id(dom f)
  Homotopy h_right;  // f ∘ f_inv -> id(cod f)
};

bool validate_equivalence_certificate(Kit& kit, const EquivalenceCertificate& c);

/// Deterministic first-hit search for a homotopy inverse with witnessing
/// homotopies; absence is a value.
std::optional<EquivalenceCertificate> find_equivalence(Kit& kit, const FunctorMap& f);

/// Search for a homotopy from f0 to f1 (first hit in enumeration order).
std::optional<Homotopy> find_homotopy(Kit& kit, const FunctorMap& f0, const FunctorMap& f1);

struct Triangle {
  FunctorMap f0;  // a0 -> a1
  FunctorMap f1;  // a1 -> a2
  FunctorMap f2;  // a0 -> a2, equal to f1 ∘ f0
};

/// Certificate for f0 from certificates for f1 and the composite.
EquivalenceCertificate two_of_three_first(Kit& kit, const Triangle& t,
                                          const EquivalenceCertificate& cert_f1,
                                          const EquivalenceCertificate& cert_f2);
/// Certificate for f1 from certificates for f0 and the composite.
EquivalenceCertificate two_of_three_middle(Kit& kit, const Triangle& t,
                                           const EquivalenceCertificate& cert_f0,
                                           const EquivalenceCertificate& cert_f2);
/// Certificate for the composite from certificates for f0 and f1.
EquivalenceCertificate two_of_three_composite(Kit& kit, const Triangle& t,
                                              const EquivalenceCertificate& cert_f0,
                                              const EquivalenceCertificate& cert_f1);

/// Given a certificate for f and a homotopy from f∘g to id, g is a
/// homotopy inverse of f; returns the certificate for g.
EquivalenceCertificate right_inverse_upgrade(Kit& kit, const EquivalenceCertificate& cert_f,
                                             const FunctorMap& g, const Homotopy& fg_to_id);

struct RetractData {
  FunctorMap g0, g1;  // sections
  FunctorMap r0, r1;  // retractions: r0∘g0 = id, r1∘g1 = id
  FunctorMap f;       // middle arrow, a homotopy equivalence
  FunctorMap f_prime; // retract arrow: f∘g0 = g1∘f', f'∘r0 = r1∘f
};

bool validate_retract(const RetractData& d);
EquivalenceCertificate retract_transfer(Kit& kit, const EquivalenceCertificate& cert_f,
                                        const RetractData& d);

}  // namespace folk

#endif
