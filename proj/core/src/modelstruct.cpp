#include "folk/modelstruct.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

namespace folk {

std::string to_string(FactorMode m) {
  switch (m) {
    case FactorMode::MappingCyl: return "cyl";
    case FactorMode::MappingCocyl: return "cocyl";
    case FactorMode::CofThenTrivFib: return "cof-tfib";
    case FactorMode::TrivCofThenFib: return "tcof-fib";
  }
  return "?";
}

bool square_commutes(const LiftProblem& p) {
  return compose(p.f, p.g0) == compose(p.g1, p.j);
}

bool fills(const LiftProblem& p, const FunctorMap& l) {
  return compose(l, p.j) == p.g0 && compose(p.f, l) == p.g1;
}

std::optional<FunctorMap> brute_force_fill(const LiftProblem& p) {
  const FinCat& A1 = *p.j.cod;  // domain of the filler
  const FinCat& A2 = *p.f.dom;  // codomain of the filler
  const int no = A1.num_objects(), na = A1.num_arrows();
  std::vector<int> obj(no, -1), arr(na, -1);
  // Pins from l∘j = g0.
  for (int x = 0; x < p.j.dom->num_objects(); ++x) {
    int y = p.j.obj(x);
    if (obj[y] >= 0 && obj[y] != p.g0.obj(x)) return std::nullopt;
    obj[y] = p.g0.obj(x);
  }
  std::vector<int> arr_pin(na, -1);
  for (int u = 0; u < p.j.dom->num_arrows(); ++u) {
    int v = p.j.arr(u);
    if (arr_pin[v] >= 0 && arr_pin[v] != p.g0.arr(u)) return std::nullopt;
    arr_pin[v] = p.g0.arr(u);
  }
  std::vector<int> obj_pin = obj;
  std::vector<int> free_arrows;
  for (int i = 0; i < na; ++i)
    if (!A1.is_identity(i)) free_arrows.push_back(i);

  std::function<bool(size_t)> rec_arr = [&](size_t k) -> bool {
    if (k == free_arrows.size()) return true;
    int i = free_arrows[k];
    for (int c = 0; c < A2.num_arrows(); ++c) {
      if (arr_pin[i] >= 0 && c != arr_pin[i]) continue;
      if (p.f.arr(c) != p.g1.arr(i)) continue;
      if (A2.src(c) != obj[A1.src(i)] || A2.tgt(c) != obj[A1.tgt(i)]) continue;
      arr[i] = c;
      bool ok = true;
      for (int g = 0; g < na && ok; ++g) {
        if (arr[g] < 0) continue;
        if (A1.composable(g, i)) {
          int gi = A1.compose(g, i);
          if (arr[gi] >= 0 && A2.compose(arr[g], arr[i]) != arr[gi]) ok = false;
        }
        if (ok && A1.composable(i, g)) {
          int ig = A1.compose(i, g);
          if (arr[ig] >= 0 && A2.compose(arr[i], arr[g]) != arr[ig]) ok = false;
        }
        for (int f2 = 0; f2 < na && ok; ++f2) {
          if (arr[f2] < 0 || !A1.composable(g, f2)) continue;
          if (A1.compose(g, f2) == i && A2.compose(arr[g], arr[f2]) != arr[i]) ok = false;
        }
      }
      if (ok && rec_arr(k + 1)) return true;
      arr[i] = -1;
    }
    return false;
  };

  std::function<bool(int)> rec_obj = [&](int y) -> bool {
    if (y == no) {
      for (int i = 0; i < no; ++i) {
        int e = A2.identity(obj[i]);
        if (p.f.arr(e) != p.g1.arr(A1.identity(i))) return false;
        if (arr_pin[A1.identity(i)] >= 0 && arr_pin[A1.identity(i)] != e) return false;
        arr[A1.identity(i)] = e;
      }
      if (rec_arr(0)) return true;
      for (int i = 0; i < no; ++i) arr[A1.identity(i)] = -1;
      return false;
    }
    for (int c = 0; c < A2.num_objects(); ++c) {
      if (obj_pin[y] >= 0 && c != obj_pin[y]) continue;
      if (p.f.obj(c) != p.g1.obj(y)) continue;
      obj[y] = c;
      if (rec_obj(y + 1)) return true;
      obj[y] = obj_pin[y];
    }
    return false;
  };

  if (!rec_obj(0)) return std::nullopt;
  FunctorMap l;
  l.dom = p.j.cod;
  l.cod = p.f.dom;
  l.obj_map = obj;
  l.arr_map = arr;
  l.name = "bf_lift";
  if (!fills(p, l)) return std::nullopt;
  return l;
}

SdrCertificate sdr_of_m(Kit& kit, const CofibrationWitness& w) {
  CatPtr a1 = w.j.cod;
  CatPtr ca1 = kit.cyl(a1);
  FunctorMap m = canonical_m(kit, w.mc);
  Homotopy first = make_homotopy(kit, ca1, compose(m, compose(w.r, kit.gur(a1))));
  Homotopy second = make_homotopy(kit, ca1, kit.glr(a1));
  Homotopy sigma = hcompose(kit, first, second);
  SdrCertificate c;
  c.j = m;
  c.r = w.r;
  c.h = sigma;
  if (!validate_sdr(kit, c)) throw std::logic_error("sdr_of_m: certificate invalid");
  return c;
}

LiftSolution lift_against_sdr(Kit& kit, const LiftProblem& p, const Cleavage& cl_f,
                              const SdrCertificate& sdr_j) {
  if (!square_commutes(p)) throw std::logic_error("lift_against_sdr: square does not commute");
  Homotopy k = cl_f.lift(kit, compose(p.g0, sdr_j.r),
                         make_homotopy(kit, p.j.cod, compose(p.g1, sdr_j.h.carrier)));
  LiftSolution s;
  s.l = k.f1;
  s.l.name = "lift(" + p.j.name + "," + p.f.name + ")";
  if (!fills(p, s.l)) throw std::logic_error("lift_against_sdr: lift does not fill");
  return s;
}

LiftSolution dual_lift_against_sdr(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                                   const SdrRetractionCertificate& sdr_f) {
  if (!square_commutes(p)) throw std::logic_error("dual_lift_against_sdr: square does not commute");
  Homotopy k = nc_j.lift(kit, compose(sdr_f.j, p.g1), whisker_right(kit, sdr_f.h, p.g0));
  LiftSolution s;
  s.l = k.f1;
  s.l.name = "lift(" + p.j.name + "," + p.f.name + ")";
  if (!fills(p, s.l)) throw std::logic_error("dual_lift_against_sdr: lift does not fill");
  return s;
}

LiftSolution chep_lift(Kit& kit, const LiftProblem& p, const CofibrationWitness& w_j,
                       const Cleavage& cl_f, const SdrRetractionCertificate& sdr_f) {
  return chep_lift(kit, p, w_j, sdr_of_m(kit, w_j), cl_f, sdr_f);
}

LiftSolution chep_lift(Kit& kit, const LiftProblem& p, const CofibrationWitness& w_j,
                       const SdrCertificate& sdr_m, const Cleavage& cl_f,
                       const SdrRetractionCertificate& sdr_f) {
  if (!square_commutes(p)) throw std::logic_error("chep_lift: square does not commute");
  CatPtr a1 = p.j.cod;
  FunctorMap u = mc_induce(kit, w_j.mc, compose(sdr_f.h.carrier, kit.cylF(p.g0)),
                           compose(sdr_f.j, p.g1));
  FunctorMap bottom = compose(p.g1, kit.p(a1));
  LiftProblem chep_square{sdr_m.j, p.f, u, bottom};
  LiftSolution inner = lift_against_sdr(kit, chep_square, cl_f, sdr_m);
  LiftSolution s;
  s.l = compose(inner.l, kit.i1(a1));
  s.l.name = "lift(" + p.j.name + "," + p.f.name + ")";
  if (!fills(p, s.l)) throw std::logic_error("chep_lift: lift does not fill");
  return s;
}

namespace {

// Section of the canonical arrow cocyl(a2) -> N_f together with the
// over-homotopy exhibiting that arrow as an SDR retraction; the dual of
// sdr_of_m. The homotopy components are forced by the over-condition.
SdrRetractionCertificate cocyl_m_sdr(Kit& kit, const FunctorMap& f, const MappingCoCylinder& mcc) {
  CatPtr a2 = f.dom;
  FunctorMap m = cocyl_m(kit, mcc);
  Cleavage cl = canonical_cleavage(f);
  Homotopy hn = transpose_inv(kit, mcc.pb.cat, mcc.d1);
  Homotopy ln = cl.lift(kit, mcc.d0, hn);
  FunctorMap n = kit.adj(ln.carrier);
  n.name = "n(" + f.name + ")";
  if (compose(m, n) != identity_functor(mcc.pb.cat))
    throw std::logic_error("cocyl_m_sdr: section equation fails");
  // Over-homotopy from n∘m to id(cocyl(a2)) w.r.t. (m, m), with identity
  // first components and the forced second components.
  const Exponential& e = kit.cocyl_exponential(a2);
  CatPtr cc = e.cat;
  FunctorMap nm = compose(n, m);
  const FinCat& A2 = *a2;
  const IntervalStructure& iv = kit.iv();
  int gen = kit.I()->unique_arrow(iv.o0, iv.o1);
  std::vector<int> comps(cc->num_objects());
  for (int psi = 0; psi < cc->num_objects(); ++psi) {
    const FunctorMap& F = e.objects[psi];          // the path psi
    const FunctorMap& G = e.objects[nm.obj(psi)];  // its chosen lift
    int mu0 = A2.identity(F.obj(iv.o0));
    int inv = A2.inverse(G.arr(gen));
    if (inv < 0) throw std::logic_error("cocyl_m_sdr: lift component not invertible");
    int mu1 = A2.compose(F.arr(gen), inv);
    int idx = e.arrow_index(nm.obj(psi), psi, {mu0, mu1});
    if (idx < 0) throw std::logic_error("cocyl_m_sdr: forced component missing");
    comps[psi] = idx;
  }
  Homotopy sigma = homotopy_from_components(kit, nm, comps);
  SdrRetractionCertificate c;
  c.f = m;
  c.j = n;
  c.h = sigma;
  if (!validate_sdr_retraction(kit, c)) throw std::logic_error("cocyl_m_sdr: certificate invalid");
  return c;
}

}  // namespace

CocylMData cocyl_m_sdr_data(Kit& kit, const FunctorMap& f) {
  CocylMData md;
  md.mcc = mapping_cocylinder(kit, f);
  md.sdr = cocyl_m_sdr(kit, f, md.mcc);
  return md;
}

LiftSolution dual_chep_lift(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                            const SdrCertificate& sdr_j) {
  return dual_chep_lift(kit, p, nc_j, sdr_j, cocyl_m_sdr_data(kit, p.f));
}

LiftSolution dual_chep_lift(Kit& kit, const LiftProblem& p, const NcCofibration& nc_j,
                            const SdrCertificate& sdr_j, const CocylMData& md) {
  if (!square_commutes(p)) throw std::logic_error("dual_chep_lift: square does not commute");
  CatPtr a2 = p.f.dom;
  // Mediating arrow a1 -> N via (g0∘r, adj(g1∘h)).
  FunctorMap leg_a = compose(p.g0, sdr_j.r);
  FunctorMap leg_b = kit.adj(whisker_left(kit, p.g1, sdr_j.h).carrier);
  FunctorMap u = pullback_induce(md.mcc.pb, leg_a, leg_b);
  FunctorMap q = compose(kit.c(a2), p.g0);
  Homotopy k = nc_j.lift(kit, compose(md.sdr.j, u), whisker_right(kit, md.sdr.h, q));
  LiftSolution s;
  s.l = compose(kit.e1(a2), k.f1);
  s.l.name = "lift(" + p.j.name + "," + p.f.name + ")";
  if (!fills(p, s.l)) throw std::logic_error("dual_chep_lift: lift does not fill");
  return s;
}

Homotopy sdr_is_fibration_lift(Kit& kit, const SdrRetractionCertificate& sdr_f,
                               const FunctorMap& g, const Homotopy& k) {
  // Lifting problem for the fibration sdr_f.f : a2 -> a0 given
  // g : x -> a2 and k : cyl(x) -> a0 with f∘g = k∘i0.
  if (compose(sdr_f.f, g) != k.f0)
    throw std::logic_error("sdr_is_fibration_lift: square does not commute");
  Homotopy first = whisker_right(kit, reverse(kit, sdr_f.h), g);
  Homotopy second = whisker_left(kit, sdr_f.j, k);
  Homotopy l = hcompose(kit, first, second);
  if (l.f0 != g || compose(sdr_f.f, l.carrier) != k.carrier)
    throw std::logic_error("sdr_is_fibration_lift: filler does not fill");
  return l;
}

Homotopy sdr_section_cofibration_fill(Kit& kit, const SdrCertificate& sdr_j,
                                      const FunctorMap& g, const Homotopy& h) {
  // Extension problem for the cofibration sdr_j.j : a0 -> a1 given
  // h : cyl(a0) -> E and g : a1 -> E with h∘i0 = g∘j.
  if (compose(g, sdr_j.j) != h.f0)
    throw std::logic_error("sdr_section_cofibration_fill: square does not commute");
  Homotopy first = whisker_left(kit, g, reverse(kit, sdr_j.h));
  Homotopy second = whisker_right(kit, h, sdr_j.r);
  Homotopy k = hcompose(kit, first, second);
  if (k.f0 != g || compose(k.carrier, kit.cylF(sdr_j.j)) != h.carrier)
    throw std::logic_error("sdr_section_cofibration_fill: filler does not restrict");
  return k;
}

CofibrationWitness composite_cofibration_witness(Kit& kit, const FunctorMap& j1,
                                                 const FunctorMap& j2,
                                                 const CofibrationFiller& fill1,
                                                 const CofibrationFiller& fill2) {
  FunctorMap j = compose(j2, j1);
  CofibrationWitness w;
  w.j = j;
  w.mc = mapping_cylinder(kit, j);
  Homotopy h = make_homotopy(kit, j.dom, w.mc.d0);
  Homotopy k0 = fill1(compose(w.mc.d1, j2), h);
  Homotopy k1 = fill2(w.mc.d1, k0);
  w.r = k1.carrier;
  w.r.name = "r(" + j.name + ")";
  if (compose(w.r, kit.cylF(j)) != w.mc.d0 || compose(w.r, kit.i0(j.cod)) != w.mc.d1)
    throw std::logic_error("composite_cofibration_witness: witness equations fail");
  return w;
}

CofibrationWitness sdr_section_cofibration_witness(Kit& kit, const SdrCertificate& sdr_j) {
  CofibrationWitness w;
  w.j = sdr_j.j;
  w.mc = mapping_cylinder(kit, sdr_j.j);
  Homotopy h = make_homotopy(kit, sdr_j.j.dom, w.mc.d0);
  Homotopy k = sdr_section_cofibration_fill(kit, sdr_j, w.mc.d1, h);
  w.r = k.carrier;
  w.r.name = "r(" + sdr_j.j.name + ")";
  if (compose(w.r, kit.cylF(w.j)) != w.mc.d0 || compose(w.r, kit.i0(w.j.cod)) != w.mc.d1)
    throw std::logic_error("sdr_section_cofibration_witness: witness equations fail");
  return w;
}

namespace {

struct RightOverInverse {
  FunctorMap g;
  Homotopy l;  // f∘g -> id, not yet over
  Homotopy H;  // f∘g -> id, over (j1, j1)
};

RightOverInverse dold_right_over_inverse(Kit& kit, const FunctorMap& f, const FunctorMap& j0,
                                         const FunctorMap& j1,
                                         const EquivalenceCertificate& cert) {
  CatPtr a1 = f.cod;
  CatPtr a = j0.cod;
  if (compose(j1, f) != j0) throw std::logic_error("dold: triangle does not commute");
  Cleavage cl0 = canonical_cleavage(j0);
  const Homotopy& hr = cert.h_right;
  Homotopy k = cl0.lift(kit, cert.f_inv, make_homotopy(kit, a1, compose(j1, hr.carrier)));
  FunctorMap g = k.f1;
  g.name = "dold_g(" + f.name + ")";
  if (compose(j0, g) != j1) throw std::logic_error("dold: g not over the base");
  Homotopy l = hcompose(kit, reverse(kit, whisker_left(kit, f, k)), hr);
  // tau via the subdivision pushout of the double cylinder.
  FunctorMap leg_r0 =
      compose(j0, compose(k.carrier, compose(kit.gul(a1), kit.cylF(kit.v(a1)))));
  FunctorMap leg_r1 = compose(j1, compose(hr.carrier, kit.gul(a1)));
  FunctorMap u = sdv_cyl_induce(kit, a1, leg_r0, leg_r1);
  FunctorMap tau = compose(u, kit.cylF(kit.s(a1)));
  CatPtr ca1 = kit.cyl(a1);
  if (compose(tau, kit.i0(ca1)) != compose(j1, l.carrier))
    throw std::logic_error("dold: tau boundary mismatch");
  Cleavage cl1 = canonical_cleavage(j1);
  Homotopy sigma = cl1.lift(kit, l.carrier, make_homotopy(kit, ca1, tau));
  DoubleHomotopy dh = boundary_of(kit, a1, sigma.carrier);
  if (dh.h0.carrier != l.carrier) throw std::logic_error("dold: sigma top boundary is not l");
  if (!is_over(kit, dh.h1, a, j1, j1) || !is_over(kit, dh.h2, a, j1, j1) ||
      !is_over(kit, dh.h3, a, j1, j1))
    throw std::logic_error("dold: boundary homotopies not over the base");
  Homotopy H = hcompose(kit, hcompose(kit, dh.h2, dh.h3), reverse(kit, dh.h1));
  if (H.f0 != compose(f, g) || H.f1 != identity_functor(a1) || !is_over(kit, H, a, j1, j1))
    throw std::logic_error("dold: assembled homotopy wrong");
  return {g, l, H};
}

}  // namespace

OverEquivalence dold_fiberwise_inverse(Kit& kit, const FunctorMap& f, const FunctorMap& j0,
                                       const FunctorMap& j1, const EquivalenceCertificate& cert) {
  CatPtr a = j0.cod;
  RightOverInverse step1 = dold_right_over_inverse(kit, f, j0, j1, cert);
  EquivalenceCertificate cert_g = right_inverse_upgrade(kit, cert, step1.g, step1.l);
  RightOverInverse step2 = dold_right_over_inverse(kit, step1.g, j1, j0, cert_g);
  // Over-homotopy g∘f -> id assembled through g'.
  FunctorMap gf = compose(step1.g, f);
  Homotopy first = whisker_left(kit, gf, reverse(kit, step2.H));
  Homotopy second = whisker(kit, step1.g, step1.H, step2.g);
  Homotopy K = hcompose(kit, first, second);
  Homotopy h_gf = hcompose(kit, K, step2.H);
  OverEquivalence out;
  out.g = step1.g;
  out.h_fg = step1.H;
  out.h_gf = h_gf;
  if (out.h_gf.f0 != gf || out.h_gf.f1 != identity_functor(f.dom))
    throw std::logic_error("dold_fiberwise_inverse: wrong boundaries");
  if (!is_over(kit, out.h_gf, a, j0, j0))
    throw std::logic_error("dold_fiberwise_inverse: homotopy not over the base");
  return out;
}

SdrRetractionCertificate sdr_for_trivial_fibration(Kit& kit, const FunctorMap& f,
                                                   const EquivalenceCertificate& cert) {
  OverEquivalence ov = dold_fiberwise_inverse(kit, f, f, identity_functor(f.cod), cert);
  SdrRetractionCertificate c;
  c.f = f;
  c.j = ov.g;
  c.h = ov.h_gf;
  if (!validate_sdr_retraction(kit, c))
    throw std::logic_error("sdr_for_trivial_fibration: certificate invalid");
  return c;
}

SdrCertificate sdr_for_trivial_cofibration(Kit& kit, const FunctorMap& j,
                                           const EquivalenceCertificate& cert) {
  const FinCat& A = *j.dom;
  const FinCat& B = *j.cod;
  if (!injective_on_objects_oracle(j) || !fully_faithful(j))
    throw std::logic_error("sdr_for_trivial_cofibration: not an injective equivalence");
  std::vector<int> preimage(B.num_objects(), -1);
  for (int x = 0; x < A.num_objects(); ++x) preimage[j.obj(x)] = x;
  // Retraction: identity on the image, certificate inverse elsewhere;
  // arrows transported through the patched components.
  std::vector<int> theta(B.num_objects());
  std::vector<int> rho(B.num_objects());
  for (int b = 0; b < B.num_objects(); ++b) {
    if (preimage[b] >= 0) {
      rho[b] = preimage[b];
      theta[b] = B.identity(b);
    } else {
      rho[b] = cert.f_inv.obj(b);
      theta[b] = component(kit, cert.h_right, b);
    }
  }
  FunctorMap r;
  r.dom = j.cod;
  r.cod = j.dom;
  r.obj_map = rho;
  r.arr_map.resize(B.num_arrows());
  for (int u = 0; u < B.num_arrows(); ++u) {
    int b = B.src(u), b2 = B.tgt(u);
    int conj = B.compose(B.inverse(theta[b2]), B.compose(u, theta[b]));
    int found = -1;
    for (int w = 0; w < A.num_arrows(); ++w)
      if (A.src(w) == rho[b] && A.tgt(w) == rho[b2] && j.arr(w) == conj) {
        found = w;
        break;
      }
    if (found < 0) throw std::logic_error("sdr_for_trivial_cofibration: missing preimage");
    r.arr_map[u] = found;
  }
  r.name = "r(" + j.name + ")";
  ValidationReport vrep = validate(r);
  if (!vrep.pass())
    throw std::logic_error("sdr_for_trivial_cofibration: retraction not a functor: " +
                           vrep.summary());
  Homotopy h = homotopy_from_components(kit, compose(j, r), theta);
  SdrCertificate c;
  c.j = j;
  c.r = r;
  c.h = h;
  if (!validate_sdr(kit, c))
    throw std::logic_error("sdr_for_trivial_cofibration: certificate invalid");
  return c;
}

bool is_sdr_retraction(Kit& kit, const FunctorMap& f) {
  CatPtr a1 = f.dom, a0 = f.cod;
  FunctorMap id0 = identity_functor(a0);
  FunctorMap id1 = identity_functor(a1);
  for (const auto& s : kit.functors(a0, a1)) {
    if (compose(f, s) != id0) continue;
    // Over-homotopy from s∘f to id(a1) w.r.t. (f, f).
    CatPtr ca = kit.cyl(a1);
    const Product& pc = kit.cyl_product(a1);
    const IntervalStructure& iv = kit.iv();
    FunctorConstraint con = empty_constraint(*ca);
    FunctorMap sf = compose(s, f);
    for (int x = 0; x < a1->num_objects(); ++x) {
      con.obj[pc.obj(x, iv.o0)] = sf.obj(x);
      con.obj[pc.obj(x, iv.o1)] = x;
    }
    for (int u = 0; u < a1->num_arrows(); ++u) {
      con.arr[pc.arr(u, kit.I()->identity(iv.o0))] = sf.arr(u);
      con.arr[pc.arr(u, kit.I()->identity(iv.o1))] = u;
    }
    FunctorMap fp = compose(f, kit.p(a1));
    auto pred = [&](const FunctorMap& carrier) { return compose(f, carrier) == fp; };
    if (search_functor(ca, a1, con, pred)) return true;
  }
  return false;
}

bool is_sdr_section(Kit& kit, const FunctorMap& j) {
  CatPtr a0 = j.dom, a1 = j.cod;
  FunctorMap id0 = identity_functor(a0);
  for (const auto& r : kit.functors(a1, a0)) {
    if (compose(r, j) != id0) continue;
    CatPtr ca = kit.cyl(a1);
    const Product& pc = kit.cyl_product(a1);
    const IntervalStructure& iv = kit.iv();
    FunctorConstraint con = empty_constraint(*ca);
    FunctorMap jr = compose(j, r);
    bool feasible = true;
    auto pin_obj = [&](int o, int v) {
      if (con.obj[o] >= 0 && con.obj[o] != v) feasible = false;
      con.obj[o] = v;
    };
    auto pin_arr = [&](int m, int v) {
      if (con.arr[m] >= 0 && con.arr[m] != v) feasible = false;
      con.arr[m] = v;
    };
    for (int x = 0; x < a1->num_objects(); ++x) {
      pin_obj(pc.obj(x, iv.o0), jr.obj(x));
      pin_obj(pc.obj(x, iv.o1), x);
    }
    for (int u = 0; u < a1->num_arrows(); ++u) {
      pin_arr(pc.arr(u, kit.I()->identity(iv.o0)), jr.arr(u));
      pin_arr(pc.arr(u, kit.I()->identity(iv.o1)), u);
    }
    // Under condition pins the whole cylinder on the image of j.
    FunctorMap jp = compose(j, kit.p(a0));
    const Product& pc0 = kit.cyl_product(a0);
    for (int o = 0; o < kit.cyl(a0)->num_objects(); ++o) {
      int x = pc0.obj1(o), t = pc0.obj2(o);
      pin_obj(pc.obj(j.obj(x), t), jp.obj(o));
    }
    for (int m = 0; m < kit.cyl(a0)->num_arrows(); ++m) {
      int u = pc0.arr1(m), w = pc0.arr2(m);
      pin_arr(pc.arr(j.arr(u), w), jp.arr(m));
    }
    if (!feasible) continue;
    if (search_functor(ca, a1, con)) return true;
  }
  return false;
}

Factorization factor_mapping_cylinder(Kit& kit, const FunctorMap& f) {
  Factorization fac;
  fac.mode = FactorMode::MappingCyl;
  fac.f = f;
  McFactorization mf = mapping_cylinder_factorization(kit, f);
  fac.mid = mf.mc.M;
  fac.j = mf.j;
  fac.g = mf.g;
  fac.audit.push_back("mid=" + mf.mc.M->name());
  // j normally cloven by the criterion lift built from the composite
  // homotopy, not by search. The criterion data for j lives on j's own
  // mapping-cylinder factorization.
  McFactorization mj = mapping_cylinder_factorization(kit, mf.j);
  NcCofibration nc;
  nc.j = mf.j;
  nc.mc = mj.mc;
  nc.j_mc = mj.j;
  nc.g_mc = mj.g;
  nc.h_mc = mj.h;
  nc.l = criterion_lift_for_factorization(kit, mf, mj);
  fac.j_nc = nc;
  // g is an SDR retraction with section d1 and the connection homotopy.
  SdrRetractionCertificate gs;
  gs.f = mf.g;
  gs.j = mf.mc.d1;
  gs.h = mf.h;
  if (!validate_sdr_retraction(kit, gs))
    throw std::logic_error("factor_mapping_cylinder: SDR data invalid");
  fac.g_sdr = gs;
  EquivalenceCertificate ge;
  ge.f = mf.g;
  ge.f_inv = mf.mc.d1;
  ge.h_left = mf.h;
  ge.h_right = identity_homotopy(kit, identity_functor(f.cod));
  // g∘d1 = id exactly, so the right homotopy is the identity homotopy.
  if (!validate_equivalence_certificate(kit, ge))
    throw std::logic_error("factor_mapping_cylinder: equivalence data invalid");
  fac.g_equiv = ge;
  return fac;
}

Factorization factor_mapping_cocylinder(Kit& kit, const FunctorMap& f) {
  Factorization fac;
  fac.mode = FactorMode::MappingCocyl;
  fac.f = f;
  CatPtr a0 = f.dom, a1 = f.cod;
  MappingCoCylinder mcc = mapping_cocylinder(kit, f);
  fac.mid = mcc.pb.cat;
  fac.audit.push_back("mid=" + mcc.pb.cat->name());
  fac.j = pullback_induce(mcc.pb, identity_functor(a0), compose(kit.c(a1), f));
  fac.j.name = "j(" + f.name + ")";
  fac.g = compose(kit.e1(a1), mcc.d1);
  fac.g.name = "g(" + f.name + ")";
  // j is a section of the SDR retraction d0, with the forced
  // under-homotopy whose components are the recorded paths.
  const FinCat& N = *mcc.pb.cat;
  const Exponential& e = kit.cocyl_exponential(a1);
  const IntervalStructure& iv = kit.iv();
  int gen = kit.I()->unique_arrow(iv.o0, iv.o1);
  std::vector<int> comps(N.num_objects());
  for (int w = 0; w < N.num_objects(); ++w) {
    int x = mcc.d0.obj(w);
    int psi = mcc.d1.obj(w);
    int path = e.objects[psi].arr(gen);  // the recorded iso f(x) -> b
    int const_psi = mcc.d1.obj(fac.j.obj(x));
    // Component at w: the N-arrow (id_x | const -> psi) whose co-cylinder
    // part has components (id_{f(x)}, path).
    int e_arrow = e.arrow_index(const_psi, psi, {a1->identity(e.objects[psi].obj(iv.o0)), path});
    if (e_arrow < 0) throw std::logic_error("factor_mapping_cocylinder: missing path component");
    int n_arrow = mcc.pb.arrow_index(a0->identity(x), e_arrow);
    if (n_arrow < 0) throw std::logic_error("factor_mapping_cocylinder: missing pullback arrow");
    comps[w] = n_arrow;
  }
  Homotopy eta = homotopy_from_components(kit, compose(fac.j, mcc.d0), comps);
  SdrCertificate js;
  js.j = fac.j;
  js.r = mcc.d0;
  js.h = eta;
  if (!validate_sdr(kit, js))
    throw std::logic_error("factor_mapping_cocylinder: SDR data invalid");
  fac.j_sdr = js;
  fac.j_cof = sdr_section_cofibration_witness(kit, js);
  EquivalenceCertificate je;
  je.f = fac.j;
  je.f_inv = mcc.d0;
  je.h_left = identity_homotopy(kit, identity_functor(a0));
  je.h_right = eta;
  if (!validate_equivalence_certificate(kit, je))
    throw std::logic_error("factor_mapping_cocylinder: equivalence data invalid");
  fac.j_equiv = je;
  // g carries the canonical cleavage.
  if (!is_isofibration(fac.g).holds)
    throw std::logic_error("factor_mapping_cocylinder: g is not an iso-fibration");
  fac.g_has_cleavage = true;
  return fac;
}

Factorization factor_composite(Kit& kit, const FunctorMap& f, FactorMode mode) {
  Factorization fac;
  fac.mode = mode;
  fac.f = f;
  if (mode == FactorMode::CofThenTrivFib) {
    Factorization first = factor_mapping_cylinder(kit, f);
    Factorization second = factor_mapping_cocylinder(kit, first.g);
    fac.mid = second.mid;
    fac.j = compose(second.j, first.j);
    fac.j.name = "j(" + f.name + ")";
    fac.g = second.g;
    fac.g.name = "g(" + f.name + ")";
    fac.audit.push_back("mid1=" + first.mid->name());
    fac.audit.push_back("mid2=" + second.mid->name());
    // Composite cofibration witness assembled from the two legs' fillers.
    NcCofibration nc1 = *first.j_nc;
    SdrCertificate sdr2 = *second.j_sdr;
    fac.j_cof = composite_cofibration_witness(
        kit, first.j, second.j,
        [&](const FunctorMap& g, const Homotopy& h) { return nc1.lift(kit, g, h); },
        [&](const FunctorMap& g, const Homotopy& h) {
          return sdr_section_cofibration_fill(kit, sdr2, g, h);
        });
    fac.g_has_cleavage = true;
    if (!is_isofibration(fac.g).holds)
      throw std::logic_error("factor_composite: g not an iso-fibration");
    // Middle equivalence by two-out-of-three: g' = g∘j'' with g', j''
    // both equivalences.
    Triangle t{second.j, second.g, first.g};
    fac.g_equiv = two_of_three_middle(kit, t, *second.j_equiv, *first.g_equiv);
    return fac;
  }
  if (mode == FactorMode::TrivCofThenFib) {
    Factorization first = factor_mapping_cocylinder(kit, f);
    Factorization second = factor_mapping_cylinder(kit, first.j);
    fac.mid = second.mid;
    fac.j = second.j;
    fac.j.name = "j(" + f.name + ")";
    fac.g = compose(first.g, second.g);
    fac.g.name = "g(" + f.name + ")";
    fac.audit.push_back("mid1=" + first.mid->name());
    fac.audit.push_back("mid2=" + second.mid->name());
    fac.j_nc = second.j_nc;
    // j trivial by two-out-of-three: first.j = second.g∘second.j.
    Triangle t{second.j, second.g, first.j};
    fac.j_equiv = two_of_three_first(kit, t, *second.g_equiv, *first.j_equiv);
    if (!is_isofibration(fac.g).holds)
      throw std::logic_error("factor_composite: composite g not an iso-fibration");
    fac.g_has_cleavage = true;
    return fac;
  }
  throw std::logic_error("factor_composite: use factor() for the plain modes");
}

Factorization factor(Kit& kit, const FunctorMap& f, FactorMode mode) {
  switch (mode) {
    case FactorMode::MappingCyl: return factor_mapping_cylinder(kit, f);
    case FactorMode::MappingCocyl: return factor_mapping_cocylinder(kit, f);
    default: return factor_composite(kit, f, mode);
  }
}

bool validate_factorization(Kit& kit, const Factorization& fac, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (compose(fac.g, fac.j) != fac.f) return fail("g∘j != f");
  if (fac.j_nc) {
    const NcCofibration& nc = *fac.j_nc;
    if (compose(nc.l, nc.j) != nc.j_mc || compose(nc.g_mc, nc.l) != identity_functor(nc.j.cod))
      return fail("criterion lift equations fail");
    if (nc.h_mc.f1 != identity_functor(nc.mc.M)) return fail("mapping cylinder homotopy boundary");
  }
  if (fac.j_cof) {
    const CofibrationWitness& w = *fac.j_cof;
    if (compose(w.r, kit.cylF(w.j)) != w.mc.d0 || compose(w.r, kit.i0(w.j.cod)) != w.mc.d1)
      return fail("cofibration witness equations fail");
  }
  if (fac.j_sdr && !validate_sdr(kit, *fac.j_sdr)) return fail("j SDR certificate invalid");
  if (fac.g_sdr && !validate_sdr_retraction(kit, *fac.g_sdr))
    return fail("g SDR certificate invalid");
  if (fac.j_equiv && !validate_equivalence_certificate(kit, *fac.j_equiv))
    return fail("j equivalence certificate invalid");
  if (fac.g_equiv && !validate_equivalence_certificate(kit, *fac.g_equiv))
    return fail("g equivalence certificate invalid");
  if (fac.g_has_cleavage) {
    if (!is_isofibration(fac.g).holds) return fail("g not an iso-fibration");
    Cleavage cl = canonical_cleavage(fac.g);
    const FinCat& dom = *fac.g.dom;
    for (int b = 0; b < dom.num_objects(); ++b)
      if (cl.rule(b, fac.g.cod->identity(fac.g.obj(b))) != dom.identity(b))
        return fail("canonical cleavage identity rule fails for g");
  }
  return true;
}

namespace {

struct ClassTable {
  std::vector<std::optional<EquivalenceCertificate>> equiv;
  std::vector<bool> fib;
  std::vector<bool> ncfib;
  std::vector<std::optional<CofibrationWitness>> cof;
  std::vector<std::optional<NcCofibration>> nccof;
};

ClassTable classify(Kit& kit, const Corpus& corpus) {
  ClassTable t;
  const auto& fs = corpus.functors;
  t.equiv.resize(fs.size());
  t.fib.resize(fs.size());
  t.ncfib.resize(fs.size());
  t.cof.resize(fs.size());
  t.nccof.resize(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) {
    t.equiv[i] = find_equivalence(kit, fs[i]);
    t.fib[i] = is_isofibration(fs[i]).holds;
    t.ncfib[i] = is_normally_cloven_fibration(kit, fs[i]);
    t.cof[i] = is_cofibration(kit, fs[i]);
    t.nccof[i] = normally_cloven_cofibration(kit, fs[i]);
  }
  return t;
}

}  // namespace

Report verify_model_axioms(Kit& kit, const Corpus& corpus, Variant variant,
                           const VerifyOptions& opts) {
  Report rep;
  rep.title = std::string("model axioms, variant ") + (variant == Variant::A ? "A" : "B");
  rep.header =
      "classes: weak equivalences = homotopy equivalences; " +
      std::string(variant == Variant::A
                      ? "fibrations = normally cloven iso-fibrations; cofibrations = "
                        "iso-cofibrations"
                      : "fibrations = iso-fibrations; cofibrations = normally cloven "
                        "iso-cofibrations") +
      "\nNOTE: all seven conditions are checked over the finite corpus (" + corpus.version +
      "); this run is a falsification harness, not a proof of the universally quantified "
      "statements.";
  CleavageProvider cleavage = opts.cleavage ? opts.cleavage : [](const FunctorMap& f) {
    return canonical_cleavage(f);
  };
  auto stamp = [] { return std::chrono::steady_clock::now(); };
  auto ms_since = [](std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  };
  auto t_cls = stamp();
  ClassTable cls = classify(kit, corpus);
  double cls_ms = ms_since(t_cls);
  {
    // Measured outcome, not assumed: do the two variants' classes
    // coincide on this corpus?
    int fib_diff = 0, cof_diff = 0;
    for (size_t i = 0; i < corpus.functors.size(); ++i) {
      if (cls.fib[i] != cls.ncfib[i]) ++fib_diff;
      if (cls.cof[i].has_value() != cls.nccof[i].has_value()) ++cof_diff;
    }
    rep.header += "\nmeasured: plain and normally cloven classes " +
                  std::string(fib_diff == 0 && cof_diff == 0 ? "coincide" : "differ") +
                  " on this corpus (fibration mismatches " + std::to_string(fib_diff) +
                  ", cofibration mismatches " + std::to_string(cof_diff) + ")";
  }
  const auto& fs = corpus.functors;
  auto in_f = [&](size_t i) { return variant == Variant::A ? cls.ncfib[i] : cls.fib[i]; };
  auto in_c = [&](size_t i) {
    return variant == Variant::A ? cls.cof[i].has_value() : cls.nccof[i].has_value();
  };

  // (i) two-out-of-three, by certificate construction.
  {
    auto t_cond = stamp();
    bool ok = true;
    std::string w;
    size_t used = 0;
    for (size_t i = 0; i < fs.size() && ok; ++i)
      for (size_t j = 0; j < fs.size() && ok; ++j) {
        if (fs[j].dom.get() != fs[i].cod.get()) continue;
        if (used >= opts.max_triangles) break;
        bool ei = cls.equiv[i].has_value(), ej = cls.equiv[j].has_value();
        if (!ei && !ej) continue;
        FunctorMap comp = compose(fs[j], fs[i]);
        bool ec = equivalence_oracle(comp);
        int known = (ei ? 1 : 0) + (ej ? 1 : 0) + (ec ? 1 : 0);
        if (known < 2) continue;
        ++used;
        Triangle t{fs[i], fs[j], comp};
        try {
          if (ei && ej) {
            EquivalenceCertificate c = two_of_three_composite(kit, t, *cls.equiv[i], *cls.equiv[j]);
            if (!validate_equivalence_certificate(kit, c) || !ec) throw std::logic_error("bad");
          }
          if (ej && ec) {
            auto cc = find_equivalence(kit, comp);
            EquivalenceCertificate c = two_of_three_first(kit, t, *cls.equiv[j], *cc);
            if (!validate_equivalence_certificate(kit, c) || !equivalence_oracle(fs[i]))
              throw std::logic_error("bad");
          }
          if (ei && ec) {
            auto cc = find_equivalence(kit, comp);
            EquivalenceCertificate c = two_of_three_middle(kit, t, *cls.equiv[i], *cc);
            if (!validate_equivalence_certificate(kit, c) || !equivalence_oracle(fs[j]))
              throw std::logic_error("bad");
          }
        } catch (const std::exception& e) {
          ok = false;
          w = "triangle (" + fs[i].name + ", " + fs[j].name + "): " + e.what();
        }
      }
    rep.add("(i) two-out-of-three", ok, w);
    rep.lines.back().ms = ms_since(t_cond) + cls_ms;
  }

  // (ii)/(iii) retract closure.
  {
    auto t_cond = stamp();
    bool cok = true, fok = true;
    std::string cw, fw;
    for (const auto& inst : corpus.retracts) {
      const RetractData& d = inst.retract;
      bool mid_c = variant == Variant::A ? is_cofibration(kit, d.f).has_value()
                                         : normally_cloven_cofibration(kit, d.f).has_value();
      bool mid_f = variant == Variant::A ? is_normally_cloven_fibration(kit, d.f)
                                         : is_isofibration(d.f).holds;
      bool mid_w = equivalence_oracle(d.f);
      bool pr_c = variant == Variant::A ? is_cofibration(kit, d.f_prime).has_value()
                                        : normally_cloven_cofibration(kit, d.f_prime).has_value();
      bool pr_f = variant == Variant::A ? is_normally_cloven_fibration(kit, d.f_prime)
                                        : is_isofibration(d.f_prime).holds;
      bool pr_w = equivalence_oracle(d.f_prime);
      if (cok && mid_c && !pr_c) {
        cok = false;
        cw = inst.name;
      }
      if (cok && mid_c && mid_w && !(pr_c && pr_w)) {
        cok = false;
        cw = inst.name + " (trivial)";
      }
      if (fok && mid_f && !pr_f) {
        fok = false;
        fw = inst.name;
      }
      if (fok && mid_f && mid_w && !(pr_f && pr_w)) {
        fok = false;
        fw = inst.name + " (trivial)";
      }
    }
    rep.add("(ii) retract closure of cofibrations", cok, cw);
    rep.lines.back().ms = ms_since(t_cond) / 2;
    rep.add("(iii) retract closure of fibrations", fok, fw);
    rep.lines.back().ms = ms_since(t_cond) / 2;
  }

  // Square generation for the lifting conditions: for a fixed j, index
  // the bottoms g1 by the composite g1∘j so tops pair up by lookup.
  using CompositeKey = std::pair<std::vector<int>, std::vector<int>>;
  std::map<std::pair<size_t, const FinCat*>, std::map<CompositeKey, std::vector<FunctorMap>>>
      bottom_index;
  auto squares_for = [&](size_t ji, size_t fi, size_t cap) {
    std::vector<LiftProblem> out;
    const FunctorMap& j = fs[ji];
    const FunctorMap& f = fs[fi];
    auto key = std::make_pair(ji, f.cod.get());
    auto it = bottom_index.find(key);
    if (it == bottom_index.end()) {
      std::map<CompositeKey, std::vector<FunctorMap>> m;
      for (const auto& g1 : kit.functors(j.cod, f.cod)) {
        FunctorMap g1j = compose(g1, j);
        m[{g1j.obj_map, g1j.arr_map}].push_back(g1);
      }
      it = bottom_index.emplace(key, std::move(m)).first;
    }
    for (const auto& g0 : kit.functors(j.dom, f.dom)) {
      FunctorMap fg0 = compose(f, g0);
      auto hit = it->second.find({fg0.obj_map, fg0.arr_map});
      if (hit == it->second.end()) continue;
      for (const auto& g1 : hit->second) {
        out.push_back({j, f, g0, g1});
        if (out.size() >= cap) return out;
      }
    }
    return out;
  };

  // (iv) trivial cofibrations lift against fibrations.
  {
    auto t_cond = stamp();
    bool ok = true;
    std::string w;
    std::map<size_t, SdrCertificate> sdr_cache;
    std::map<size_t, CocylMData> md_cache;
    for (size_t ji = 0; ji < fs.size() && ok; ++ji) {
      if (!in_c(ji) || !cls.equiv[ji]) continue;
      SdrCertificate sdr_j = [&] {
        auto it = sdr_cache.find(ji);
        if (it != sdr_cache.end()) return it->second;
        SdrCertificate s = sdr_for_trivial_cofibration(kit, fs[ji], *cls.equiv[ji]);
        sdr_cache.emplace(ji, s);
        return s;
      }();
      for (size_t fi = 0; fi < fs.size() && ok; ++fi) {
        if (!in_f(fi)) continue;
        auto squares = squares_for(ji, fi, opts.max_squares_per_pair);
        if (squares.empty()) continue;
        const CocylMData* md = nullptr;
        if (variant == Variant::B) {
          auto it = md_cache.find(fi);
          if (it == md_cache.end()) it = md_cache.emplace(fi, cocyl_m_sdr_data(kit, fs[fi])).first;
          md = &it->second;
        }
        for (const auto& p : squares) {
          try {
            LiftSolution sol =
                variant == Variant::A
                    ? lift_against_sdr(kit, p, cleavage(p.f), sdr_j)
                    : dual_chep_lift(kit, p, *cls.nccof[ji], sdr_j, *md);
            if (opts.brute_force_confirm && !brute_force_fill(p))
              throw std::logic_error("brute force finds no filler");
            (void)sol;
          } catch (const std::exception& e) {
            ok = false;
            w = "square (j = " + p.j.name + ", f = " + p.f.name + ", g0 = " + p.g0.name +
                ", g1 = " + p.g1.name + "): " + e.what();
            break;
          }
        }
      }
    }
    rep.add("(iv) lifting: trivial cofibration vs fibration", ok, w);
    rep.lines.back().ms = ms_since(t_cond);
  }

  // (v) cofibrations lift against trivial fibrations.
  {
    auto t_cond = stamp();
    bool ok = true;
    std::string w;
    std::map<size_t, SdrRetractionCertificate> sdr_cache;
    std::map<size_t, SdrCertificate> m_cache;
    for (size_t fi = 0; fi < fs.size() && ok; ++fi) {
      if (!in_f(fi) || !cls.equiv[fi]) continue;
      SdrRetractionCertificate sdr_f = [&] {
        auto it = sdr_cache.find(fi);
        if (it != sdr_cache.end()) return it->second;
        SdrRetractionCertificate s = sdr_for_trivial_fibration(kit, fs[fi], *cls.equiv[fi]);
        sdr_cache.emplace(fi, s);
        return s;
      }();
      for (size_t ji = 0; ji < fs.size() && ok; ++ji) {
        if (!in_c(ji)) continue;
        auto squares = squares_for(ji, fi, opts.max_squares_per_pair);
        if (squares.empty()) continue;
        const SdrCertificate* sdr_m = nullptr;
        if (variant == Variant::A) {
          auto it = m_cache.find(ji);
          if (it == m_cache.end()) it = m_cache.emplace(ji, sdr_of_m(kit, *cls.cof[ji])).first;
          sdr_m = &it->second;
        }
        for (const auto& p : squares) {
          try {
            LiftSolution sol =
                variant == Variant::A
                    ? chep_lift(kit, p, *cls.cof[ji], *sdr_m, cleavage(p.f), sdr_f)
                    : dual_lift_against_sdr(kit, p, *cls.nccof[ji], sdr_f);
            if (opts.brute_force_confirm && !brute_force_fill(p))
              throw std::logic_error("brute force finds no filler");
            (void)sol;
          } catch (const std::exception& e) {
            ok = false;
            w = "square (j = " + p.j.name + ", f = " + p.f.name + ", g0 = " + p.g0.name +
                ", g1 = " + p.g1.name + "): " + e.what();
            break;
          }
        }
      }
    }
    rep.add("(v) lifting: cofibration vs trivial fibration", ok, w);
    rep.lines.back().ms = ms_since(t_cond);
  }

  // (vi)/(vii) factorizations.
  {
    auto t_cond = stamp();
    bool ok6 = true, ok7 = true;
    std::string w6, w7;
    for (size_t i = 0; i < fs.size(); ++i) {
      // Class membership is certified by the attached formula-built
      // witnesses (validated above), cross-checked with the cheap oracles.
      if (ok6) {
        try {
          Factorization fac = variant == Variant::A
                                  ? factor_composite(kit, fs[i], FactorMode::CofThenTrivFib)
                                  : factor_mapping_cylinder(kit, fs[i]);
          std::string why;
          if (!validate_factorization(kit, fac, &why)) throw std::logic_error(why);
          bool jc = variant == Variant::A ? fac.j_cof.has_value() : fac.j_nc.has_value();
          bool gw = equivalence_oracle(fac.g);
          bool gf = variant == Variant::A ? is_normally_cloven_fibration(kit, fac.g)
                                          : is_isofibration(fac.g).holds;
          if (!jc || !injective_on_objects_oracle(fac.j) || !gw || !gf)
            throw std::logic_error("factor classes wrong");
        } catch (const std::exception& e) {
          ok6 = false;
          w6 = "f = " + fs[i].name + ": " + e.what();
        }
      }
      if (ok7) {
        try {
          Factorization fac = variant == Variant::A
                                  ? factor_mapping_cocylinder(kit, fs[i])
                                  : factor_composite(kit, fs[i], FactorMode::TrivCofThenFib);
          std::string why;
          if (!validate_factorization(kit, fac, &why)) throw std::logic_error(why);
          bool jc = variant == Variant::A ? fac.j_cof.has_value() : fac.j_nc.has_value();
          bool jw = equivalence_oracle(fac.j);
          bool gf = variant == Variant::A ? is_normally_cloven_fibration(kit, fac.g)
                                          : is_isofibration(fac.g).holds;
          if (!jc || !jw || !gf) throw std::logic_error("factor classes wrong");
        } catch (const std::exception& e) {
          ok7 = false;
          w7 = "f = " + fs[i].name + ": " + e.what();
        }
      }
    }
    rep.add("(vi) factorization: cofibration then trivial fibration", ok6, w6);
    rep.lines.back().ms = ms_since(t_cond) / 2;
    rep.add("(vii) factorization: trivial cofibration then fibration", ok7, w7);
    rep.lines.back().ms = ms_since(t_cond) / 2;
  }
  return rep;
}

}  // namespace folk
