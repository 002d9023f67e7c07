#include "folk/fibcof.hpp"

#include <stdexcept>

namespace folk {

std::string IsoFibrationResult::describe(const FunctorMap& f) const {
  if (holds) return "";
  return "object " + f.dom->object_name(witness_obj) + " over iso " +
         f.cod->arrow(witness_iso).name;
}

IsoFibrationResult is_isofibration(const FunctorMap& f) {
  const FinCat& A = *f.dom;
  const FinCat& B = *f.cod;
  for (int b = 0; b < A.num_objects(); ++b) {
    for (int phi = 0; phi < B.num_arrows(); ++phi) {
      if (!B.is_iso(phi) || B.src(phi) != f.obj(b)) continue;
      bool lifted = false;
      for (int psi = 0; psi < A.num_arrows() && !lifted; ++psi)
        if (A.is_iso(psi) && A.src(psi) == b && f.arr(psi) == phi) lifted = true;
      if (!lifted) return {false, b, phi};
    }
  }
  return {true, -1, -1};
}

Cleavage canonical_cleavage(const FunctorMap& f) {
  Cleavage cl;
  cl.f = f;
  FunctorMap fc = f;
  cl.rule = [fc](int obj, int iso) {
    const FinCat& A = *fc.dom;
    const FinCat& B = *fc.cod;
    if (B.is_identity(iso)) return A.identity(obj);
    for (int psi = 0; psi < A.num_arrows(); ++psi)
      if (A.is_iso(psi) && A.src(psi) == obj && fc.arr(psi) == iso) return psi;
    throw std::logic_error("cleavage: no lift for " + B.arrow(iso).name + " at " +
                           A.object_name(obj));
  };
  return cl;
}

Cleavage broken_cleavage(const FunctorMap& f) {
  Cleavage cl;
  cl.f = f;
  FunctorMap fc = f;
  cl.rule = [fc](int obj, int iso) {
    const FinCat& A = *fc.dom;
    const FinCat& B = *fc.cod;
    // Prefer a non-identity lift even for identity input: violates the
    // lifting-of-identities condition whenever one exists.
    if (B.is_identity(iso)) {
      for (int psi = 0; psi < A.num_arrows(); ++psi)
        if (A.is_iso(psi) && !A.is_identity(psi) && A.src(psi) == obj && fc.arr(psi) == iso)
          return psi;
      return A.identity(obj);
    }
    for (int psi = 0; psi < A.num_arrows(); ++psi)
      if (A.is_iso(psi) && A.src(psi) == obj && fc.arr(psi) == iso) return psi;
    throw std::logic_error("cleavage: no lift for " + B.arrow(iso).name);
  };
  return cl;
}

Homotopy Cleavage::lift(Kit& kit, const FunctorMap& g, const Homotopy& h) const {
  if (g.cod.get() != f.dom.get() || h.a1.get() != f.cod.get() || g.dom.get() != h.a0.get())
    throw std::logic_error("cleavage lift: square shape");
  if (compose(f, g) != h.f0) throw std::logic_error("cleavage lift: square does not commute");
  std::vector<int> comps(g.dom->num_objects());
  for (int x = 0; x < g.dom->num_objects(); ++x) comps[x] = rule(g.obj(x), component(kit, h, x));
  Homotopy l = homotopy_from_components(kit, g, comps);
  if (compose(f, l.carrier) != h.carrier) throw std::logic_error("cleavage lift: does not fill");
  return l;
}

Report cleavage_invariants(Kit& kit, const Cleavage& cl,
                           const std::vector<FunctorMap>& corpus_functors, int max_squares) {
  Report rep;
  rep.title = "cleavage invariants for " + cl.f.name;
  int used = 0;
  bool fill_ok = true, ident_ok = true, compat_ok = true;
  std::string fill_w, ident_w, compat_w;
  for (const auto& g : corpus_functors) {
    if (g.cod.get() != cl.f.dom.get()) continue;
    if (used >= max_squares) break;
    // Identity rule on the degenerate square.
    Homotopy idh = identity_homotopy(kit, compose(cl.f, g));
    Homotopy l0 = cl.lift(kit, g, idh);
    if (ident_ok && l0.carrier != identity_homotopy(kit, g).carrier) {
      ident_ok = false;
      ident_w = "g = " + g.name;
    }
    // All homotopies out of f∘g, capped.
    FunctorMap fg = compose(cl.f, g);
    CatPtr x = g.dom;
    const Product& pc = kit.cyl_product(x);
    FunctorConstraint con = empty_constraint(*kit.cyl(x));
    for (int o = 0; o < x->num_objects(); ++o) con.obj[pc.obj(o, kit.iv().o0)] = fg.obj(o);
    for (int u = 0; u < x->num_arrows(); ++u)
      con.arr[pc.arr(u, kit.I()->identity(kit.iv().o0))] = fg.arr(u);
    auto carriers = enumerate_functors_constrained(kit.cyl(x), cl.f.cod, con,
                                                   static_cast<size_t>(max_squares));
    for (const auto& carrier : carriers) {
      if (used >= max_squares) break;
      ++used;
      Homotopy h = make_homotopy(kit, x, carrier);
      Homotopy l = cl.lift(kit, g, h);
      if (fill_ok && (compose(cl.f, l.carrier) != h.carrier || l.f0 != g)) {
        fill_ok = false;
        fill_w = "g = " + g.name;
      }
      for (const auto& g0 : corpus_functors) {
        if (g0.cod.get() != x.get()) continue;
        Homotopy lhs = cl.lift(kit, compose(g, g0), whisker_right(kit, h, g0));
        Homotopy rhs = whisker_right(kit, l, g0);
        if (compat_ok && lhs.carrier != rhs.carrier) {
          compat_ok = false;
          compat_w = "g = " + g.name + ", g0 = " + g0.name;
        }
        break;  // one precomposition per square keeps the suite small
      }
    }
  }
  rep.add("cleavage.filler", fill_ok, fill_w);
  rep.add("cleavage.lifting_of_identities", ident_ok, ident_w);
  rep.add("cleavage.compatibility_of_liftings", compat_ok, compat_w);
  return rep;
}

bool is_normally_cloven_fibration(Kit& kit, const FunctorMap& f) {
  (void)kit;
  if (!is_isofibration(f).holds) return false;
  // The canonical chooser is pointwise in its inputs, so the two
  // normally-cloven conditions hold structurally; spot-check the
  // identity rule to guard the implementation.
  Cleavage cl = canonical_cleavage(f);
  const FinCat& dom = *f.dom;
  for (int b = 0; b < dom.num_objects(); ++b)
    if (cl.rule(b, f.cod->identity(f.obj(b))) != dom.identity(b)) return false;
  return true;
}

std::optional<CofibrationWitness> is_cofibration(Kit& kit, const FunctorMap& j) {
  CatPtr a0 = j.dom, a1 = j.cod;
  MappingCylinder mc = mapping_cylinder(kit, j);
  const Product& pc0 = kit.cyl_product(a0);
  const Product& pc1 = kit.cyl_product(a1);
  CatPtr ca1 = pc1.cat;
  FunctorConstraint con = empty_constraint(*ca1);
  auto set_obj = [&](int o, int v) {
    if (con.obj[o] >= 0 && con.obj[o] != v) return false;
    con.obj[o] = v;
    return true;
  };
  auto set_arr = [&](int m, int v) {
    if (con.arr[m] >= 0 && con.arr[m] != v) return false;
    con.arr[m] = v;
    return true;
  };
  // r∘cyl(j) = d0
  for (int o = 0; o < pc0.cat->num_objects(); ++o) {
    int x = pc0.obj1(o), t = pc0.obj2(o);
    if (!set_obj(pc1.obj(j.obj(x), t), mc.d0.obj(o))) return std::nullopt;
  }
  for (int m = 0; m < pc0.cat->num_arrows(); ++m) {
    int u = pc0.arr1(m), w = pc0.arr2(m);
    if (!set_arr(pc1.arr(j.arr(u), w), mc.d0.arr(m))) return std::nullopt;
  }
  // r∘i0(a1) = d1
  const IntervalStructure& iv = kit.iv();
  for (int y = 0; y < a1->num_objects(); ++y)
    if (!set_obj(pc1.obj(y, iv.o0), mc.d1.obj(y))) return std::nullopt;
  for (int v = 0; v < a1->num_arrows(); ++v)
    if (!set_arr(pc1.arr(v, kit.I()->identity(iv.o0)), mc.d1.arr(v))) return std::nullopt;
  auto found = search_functor(ca1, mc.M, con);
  if (!found) return std::nullopt;
  CofibrationWitness w;
  w.j = j;
  w.mc = std::move(mc);
  w.r = *found;
  w.r.name = "r(" + j.name + ")";
  return w;
}

Homotopy cofibration_fill(Kit& kit, const CofibrationWitness& w, const FunctorMap& g,
                          const Homotopy& h) {
  FunctorMap u = mc_induce(kit, w.mc, h.carrier, g);
  Homotopy k = make_homotopy(kit, w.j.cod, compose(u, w.r));
  if (compose(k.carrier, kit.cylF(w.j)) != h.carrier || k.f0 != g)
    throw std::logic_error("cofibration_fill: filler does not restrict correctly");
  return k;
}

McFactorization mapping_cylinder_factorization(Kit& kit, const FunctorMap& f) {
  CatPtr a0 = f.dom, a1 = f.cod;
  McFactorization fac;
  fac.mc = mapping_cylinder(kit, f);
  fac.j = compose(fac.mc.d0, kit.i1(a0));
  fac.j.name = "j(" + f.name + ")";
  fac.g = mc_induce(kit, fac.mc, compose(f, kit.p(a0)), identity_functor(a1));
  fac.g.name = "g(" + f.name + ")";
  FunctorMap leg2 = compose(fac.mc.d0, kit.glr(a0));
  FunctorMap legc = compose(fac.mc.d1, kit.p(a1));
  fac.h = make_homotopy(kit, fac.mc.M, mc_cyl_induce(kit, fac.mc, leg2, legc));
  if (fac.h.f0 != compose(fac.mc.d1, fac.g) || fac.h.f1 != identity_functor(fac.mc.M))
    throw std::logic_error("mapping_cylinder_factorization: wrong homotopy boundaries");
  if (!is_over(kit, fac.h, a1, fac.g, fac.g))
    throw std::logic_error("mapping_cylinder_factorization: homotopy not over the target");
  return fac;
}

FunctorMap criterion_lift_for_factorization(Kit& kit, const McFactorization& fac_f,
                                            const McFactorization& fac_j) {
  if (fac_j.mc.f != fac_f.j)
    throw std::logic_error("criterion_lift: fac_j must factor fac_f.j");
  CatPtr a0 = fac_f.mc.f.dom;
  Homotopy first = make_homotopy(kit, a0, compose(fac_j.mc.d1, fac_f.mc.d0));
  Homotopy second = make_homotopy(kit, a0, fac_j.mc.d0);
  Homotopy comp = hcompose(kit, first, second);
  FunctorMap l = mc_induce(kit, fac_f.mc, comp.carrier, compose(fac_j.mc.d1, fac_f.mc.d1));
  l.name = "l(" + fac_f.mc.f.name + ")";
  if (compose(l, fac_f.j) != fac_j.j ||
      compose(fac_j.g, l) != identity_functor(fac_f.j.cod))
    throw std::logic_error("criterion_lift: lift equations fail");
  return l;
}

Homotopy NcCofibration::lift(Kit& kit, const FunctorMap& g, const Homotopy& h) const {
  if (h.a0.get() != j.dom.get() || g.dom.get() != j.cod.get() || h.a1.get() != g.cod.get())
    throw std::logic_error("nc cofibration lift: square shape");
  if (h.f0 != compose(g, j)) throw std::logic_error("nc cofibration lift: square does not commute");
  FunctorMap u = mc_induce(kit, mc, h.carrier, g);
  Homotopy k = make_homotopy(kit, j.cod, compose(u, compose(h_mc.carrier, kit.cylF(l))));
  if (compose(k.carrier, kit.cylF(j)) != h.carrier || k.f0 != g)
    throw std::logic_error("nc cofibration lift: filler does not restrict correctly");
  return k;
}

std::optional<NcCofibration> normally_cloven_cofibration(Kit& kit, const FunctorMap& j) {
  McFactorization fac = mapping_cylinder_factorization(kit, j);
  // Criterion lift l : a1 -> M with l∘j = j_mc and g_mc∘l = id.
  CatPtr a1 = j.cod;
  FunctorConstraint con = empty_constraint(*a1);
  // The constraint lives on a functor a1 -> M; encode the two equations
  // by per-object/arrow candidate pinning where forced, and a final
  // predicate otherwise.
  FunctorMap jm = fac.j, gm = fac.g;
  FunctorMap id1 = identity_functor(a1);
  auto pred = [&](const FunctorMap& l) {
    return compose(l, j) == jm && compose(gm, l) == id1;
  };
  // Pin images on the image of j.
  for (int x = 0; x < j.dom->num_objects(); ++x) {
    int y = j.obj(x);
    if (con.obj[y] >= 0 && con.obj[y] != jm.obj(x)) return std::nullopt;
    con.obj[y] = jm.obj(x);
  }
  for (int u = 0; u < j.dom->num_arrows(); ++u) {
    int v = j.arr(u);
    if (con.arr[v] >= 0 && con.arr[v] != jm.arr(u)) return std::nullopt;
    con.arr[v] = jm.arr(u);
  }
  auto found = search_functor(a1, fac.mc.M, con, pred);
  if (!found) return std::nullopt;
  NcCofibration nc;
  nc.j = j;
  nc.mc = fac.mc;
  nc.j_mc = fac.j;
  nc.g_mc = fac.g;
  nc.h_mc = fac.h;
  nc.l = *found;
  nc.l.name = "l(" + j.name + ")";
  return nc;
}

bool cocylinder_fibration_verdict(Kit& kit, const FunctorMap& f) {
  MappingCoCylinder mcc = mapping_cocylinder(kit, f);
  FunctorMap m = cocyl_m(kit, mcc);
  return search_section(m).has_value();
}

Report closure_checks(Kit& kit, const std::vector<FunctorMap>& corpus_functors,
                      const std::vector<ClosureInstance>& retracts) {
  Report rep;
  rep.title = "closure checks";
  // Identities are cofibrations and fibrations.
  {
    bool ok = true;
    std::string w;
    std::vector<const FinCat*> seen;
    for (const auto& f : corpus_functors) {
      if (std::find(seen.begin(), seen.end(), f.dom.get()) != seen.end()) continue;
      seen.push_back(f.dom.get());
      FunctorMap id = identity_functor(f.dom);
      if (!is_cofibration(kit, id) || !is_isofibration(id).holds) {
        ok = false;
        w = "id on " + f.dom->name();
        break;
      }
    }
    rep.add("closure.identity", ok, w);
  }
  // Composition closure.
  {
    bool cof_ok = true, fib_ok = true;
    std::string cof_w, fib_w;
    for (const auto& f : corpus_functors)
      for (const auto& g : corpus_functors) {
        if (g.dom.get() != f.cod.get()) continue;
        FunctorMap gf = compose(g, f);
        if (cof_ok && is_cofibration(kit, f) && is_cofibration(kit, g) &&
            !is_cofibration(kit, gf)) {
          cof_ok = false;
          cof_w = g.name + " . " + f.name;
        }
        if (fib_ok && is_isofibration(f).holds && is_isofibration(g).holds &&
            !is_isofibration(gf).holds) {
          fib_ok = false;
          fib_w = g.name + " . " + f.name;
        }
      }
    rep.add("closure.composition_cofibrations", cof_ok, cof_w);
    rep.add("closure.composition_fibrations", fib_ok, fib_w);
  }
  // Retract closure on the curated instances.
  {
    bool ok = true;
    std::string w;
    for (const auto& inst : retracts) {
      const RetractData& d = inst.retract;
      if (!validate_retract(d)) {
        ok = false;
        w = inst.name + ": retract squares invalid";
        break;
      }
      bool f_cof = is_cofibration(kit, d.f).has_value();
      bool f_fib = is_isofibration(d.f).holds;
      bool f_eq = equivalence_oracle(d.f);
      if (f_cof && !is_cofibration(kit, d.f_prime)) {
        ok = false;
        w = inst.name + ": cofibration not closed";
        break;
      }
      if (f_fib && !is_isofibration(d.f_prime).holds) {
        ok = false;
        w = inst.name + ": fibration not closed";
        break;
      }
      if (f_eq && !equivalence_oracle(d.f_prime)) {
        ok = false;
        w = inst.name + ": equivalence not closed";
        break;
      }
    }
    rep.add("closure.retracts", ok, w);
  }
  return rep;
}

}  // namespace folk
