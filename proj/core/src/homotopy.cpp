#include "folk/homotopy.hpp"

#include <stdexcept>

namespace folk {

bool operator==(const Homotopy& a, const Homotopy& b) { return a.carrier == b.carrier; }

Homotopy make_homotopy(Kit& kit, CatPtr a0, const FunctorMap& carrier) {
  if (carrier.dom.get() != kit.cyl(a0).get())
    throw std::logic_error("make_homotopy: carrier domain is not cyl(a0)");
  Homotopy h;
  h.carrier = carrier;
  h.a0 = a0;
  h.a1 = carrier.cod;
  h.f0 = compose(carrier, kit.i0(a0));
  h.f1 = compose(carrier, kit.i1(a0));
  return h;
}

Homotopy identity_homotopy(Kit& kit, const FunctorMap& f) {
  return make_homotopy(kit, f.dom, compose(f, kit.p(f.dom)));
}

Homotopy reverse(Kit& kit, const Homotopy& h) {
  return make_homotopy(kit, h.a0, compose(h.carrier, kit.v(h.a0)));
}

Homotopy hcompose(Kit& kit, const Homotopy& h, const Homotopy& k) {
  if (static_cast<size_t>(h.a0->num_arrows()) * kit.S()->num_arrows() > 2000)
    return hcompose_components(kit, h, k);
  return hcompose_subdivision(kit, h, k);
}

Homotopy hcompose_components(Kit& kit, const Homotopy& h, const Homotopy& k) {
  if (h.a0.get() != k.a0.get() || h.a1.get() != k.a1.get())
    throw std::logic_error("hcompose: endpoint mismatch");
  if (h.f1 != k.f0) throw std::logic_error("hcompose: boundary mismatch");
  std::vector<int> comps(h.a0->num_objects());
  for (int x = 0; x < h.a0->num_objects(); ++x)
    comps[x] = h.a1->compose(component(kit, k, x), component(kit, h, x));
  Homotopy out = homotopy_from_components(kit, h.f0, comps);
  if (out.f1 != k.f1) throw std::logic_error("hcompose: bad boundaries");
  return out;
}

Homotopy hcompose_subdivision(Kit& kit, const Homotopy& h, const Homotopy& k) {
  if (h.a0.get() != k.a0.get() || h.a1.get() != k.a1.get())
    throw std::logic_error("hcompose: endpoint mismatch");
  if (h.f1 != k.f0) throw std::logic_error("hcompose: boundary mismatch");
  CatPtr a0 = h.a0;
  const Product& pc = kit.cyl_product(a0);
  const Product& ps = kit.sdv_product(a0);
  const IntervalStructure& iv = kit.iv();
  const FinCat& S = *kit.S();
  const FinCat& E = *h.a1;
  // Mediating functor r : a0 x S -> a1 with r∘r0 = h and r∘r1 = k.
  FunctorMap r;
  r.dom = ps.cat;
  r.cod = h.a1;
  r.obj_map.resize(ps.cat->num_objects());
  for (int o = 0; o < ps.cat->num_objects(); ++o) {
    int x = ps.obj1(o), sig = ps.obj2(o);
    if (sig == iv.s0)
      r.obj_map[o] = h.carrier.obj(pc.obj(x, iv.o0));
    else if (sig == iv.s1)
      r.obj_map[o] = h.carrier.obj(pc.obj(x, iv.o1));
    else
      r.obj_map[o] = k.carrier.obj(pc.obj(x, iv.o1));
  }
  const FinCat& I = *kit.I();
  auto leg = [&](const Homotopy& L, int u, int t_from, int t_to) {
    return L.carrier.arr(pc.arr(u, I.unique_arrow(t_from, t_to)));
  };
  r.arr_map.resize(ps.cat->num_arrows());
  for (int m = 0; m < ps.cat->num_arrows(); ++m) {
    int u = ps.arr1(m), ws = ps.arr2(m);
    int sf = S.src(ws), st = S.tgt(ws);
    bool f0 = (sf == iv.s0 || sf == iv.s1), t0 = (st == iv.s0 || st == iv.s1);
    bool f1 = (sf == iv.s1 || sf == iv.s2), t1 = (st == iv.s1 || st == iv.s2);
    if (f0 && t0) {
      r.arr_map[m] = leg(h, u, sf == iv.s0 ? iv.o0 : iv.o1, st == iv.s0 ? iv.o0 : iv.o1);
    } else if (f1 && t1) {
      r.arr_map[m] = leg(k, u, sf == iv.s1 ? iv.o0 : iv.o1, st == iv.s1 ? iv.o0 : iv.o1);
    } else if (sf == iv.s0) {  // 0 -> 2 crossing
      int x2 = h.a0->tgt(u);
      r.arr_map[m] = E.compose(leg(k, h.a0->identity(x2), iv.o0, iv.o1), leg(h, u, iv.o0, iv.o1));
    } else {  // 2 -> 0 crossing
      int x1 = h.a0->src(u);
      r.arr_map[m] = E.compose(leg(h, u, iv.o1, iv.o0), leg(k, h.a0->identity(x1), iv.o1, iv.o0));
    }
  }
  r.name = "[" + h.carrier.name + "+" + k.carrier.name + "]";
  ValidationReport rep = validate(r);
  if (!rep.pass()) throw std::logic_error("hcompose: mediating map not a functor: " + rep.summary());
  if (compose(r, kit.r0(a0)) != h.carrier || compose(r, kit.r1(a0)) != k.carrier)
    throw std::logic_error("hcompose: legs not recovered");
  Homotopy out = make_homotopy(kit, a0, compose(r, kit.s(a0)));
  if (out.f0 != h.f0 || out.f1 != k.f1) throw std::logic_error("hcompose: bad boundaries");
  return out;
}

Homotopy whisker(Kit& kit, const FunctorMap& g1, const Homotopy& h, const FunctorMap& g0) {
  return make_homotopy(kit, g0.dom, compose(g1, compose(h.carrier, kit.cylF(g0))));
}

Homotopy whisker_left(Kit& kit, const FunctorMap& g1, const Homotopy& h) {
  return make_homotopy(kit, h.a0, compose(g1, h.carrier));
}

Homotopy whisker_right(Kit& kit, const Homotopy& h, const FunctorMap& g0) {
  return make_homotopy(kit, g0.dom, compose(h.carrier, kit.cylF(g0)));
}

FunctorMap transpose(Kit& kit, const Homotopy& h) { return kit.adj(h.carrier); }

Homotopy transpose_inv(Kit& kit, CatPtr a0, const FunctorMap& k) {
  return make_homotopy(kit, a0, kit.adj_inv(k));
}

int component(Kit& kit, const Homotopy& h, int x) {
  const Product& pc = kit.cyl_product(h.a0);
  return h.carrier.arr(pc.arr(h.a0->identity(x), kit.I()->unique_arrow(kit.iv().o0, kit.iv().o1)));
}

Homotopy homotopy_from_components(Kit& kit, const FunctorMap& f0, const std::vector<int>& comps) {
  CatPtr a0 = f0.dom;
  CatPtr a1 = f0.cod;
  const FinCat& B = *a1;
  const Product& pc = kit.cyl_product(a0);
  const IntervalStructure& iv = kit.iv();
  std::vector<int> inv(comps.size());
  for (size_t x = 0; x < comps.size(); ++x) {
    inv[x] = B.inverse(comps[x]);
    if (inv[x] < 0) throw std::logic_error("homotopy_from_components: component not invertible");
  }
  FunctorMap carrier;
  carrier.dom = pc.cat;
  carrier.cod = a1;
  carrier.obj_map.resize(pc.cat->num_objects());
  for (int o = 0; o < pc.cat->num_objects(); ++o) {
    int x = pc.obj1(o), t = pc.obj2(o);
    carrier.obj_map[o] = t == iv.o0 ? f0.obj(x) : B.tgt(comps[x]);
  }
  carrier.arr_map.resize(pc.cat->num_arrows());
  const FinCat& I = *kit.I();
  for (int m = 0; m < pc.cat->num_arrows(); ++m) {
    int u = pc.arr1(m), w = pc.arr2(m);
    int x = a0->src(u), y = a0->tgt(u);
    int t0 = I.src(w), t1 = I.tgt(w);
    int e = f0.arr(u);
    if (t0 == iv.o1) e = B.compose(e, inv[x]);
    if (t1 == iv.o1) e = B.compose(comps[y], e);
    carrier.arr_map[m] = e;
  }
  carrier.name = "h(" + f0.name + ")";
  ValidationReport rep = validate(carrier);
  if (!rep.pass())
    throw std::logic_error("homotopy_from_components: carrier not a functor: " + rep.summary());
  Homotopy h = make_homotopy(kit, a0, carrier);
  if (h.f0 != f0) throw std::logic_error("homotopy_from_components: source boundary mismatch");
  return h;
}

DoubleHomotopy boundary_of(Kit& kit, CatPtr a0, const FunctorMap& carrier) {
  DoubleHomotopy d;
  d.carrier = carrier;
  CatPtr ca = kit.cyl(a0);
  d.h0 = make_homotopy(kit, a0, compose(carrier, kit.i0(ca)));
  d.h1 = make_homotopy(kit, a0, compose(carrier, kit.cylF(kit.i1(a0))));
  d.h2 = make_homotopy(kit, a0, compose(carrier, kit.cylF(kit.i0(a0))));
  d.h3 = make_homotopy(kit, a0, compose(carrier, kit.i1(ca)));
  d.f0 = d.h0.f0;
  d.f1 = d.h0.f1;
  d.f2 = d.h2.f1;
  d.f3 = d.h3.f1;
  if (d.h1.f0 != d.f1 || d.h2.f0 != d.f0 || d.h3.f0 != d.f2 || d.h1.f1 != d.f3)
    throw std::logic_error("boundary_of: inconsistent corners");
  return d;
}

DoubleHomotopy connection_double(Kit& kit, const Homotopy& h, Connection which) {
  FunctorMap gamma;
  switch (which) {
    case Connection::UpperLeft: gamma = kit.gul(h.a0); break;
    case Connection::LowerRight: gamma = kit.glr(h.a0); break;
    case Connection::UpperRight: gamma = kit.gur(h.a0); break;
  }
  return boundary_of(kit, h.a0, compose(h.carrier, gamma));
}

bool is_under(Kit& kit, const Homotopy& h, CatPtr a, const FunctorMap& j0, const FunctorMap& j1) {
  if (j0.dom.get() != a.get() || j1.dom.get() != a.get()) return false;
  if (j0.cod.get() != h.a0.get() || j1.cod.get() != h.a1.get()) return false;
  return compose(h.carrier, kit.cylF(j0)) == compose(j1, kit.p(a));
}

bool is_over(Kit& kit, const Homotopy& h, CatPtr a, const FunctorMap& j0, const FunctorMap& j1) {
  if (j0.cod.get() != a.get() || j1.cod.get() != a.get()) return false;
  if (j0.dom.get() != h.a0.get() || j1.dom.get() != h.a1.get()) return false;
  // j1∘h = p(a)∘cyl(j0), computed as j0∘p(a0) to stay inside cached objects.
  return compose(j1, h.carrier) == compose(j0, kit.p(h.a0));
}

bool validate_sdr(Kit& kit, const SdrCertificate& c) {
  if (compose(c.r, c.j) != identity_functor(c.j.dom)) return false;
  if (c.h.f0 != compose(c.j, c.r)) return false;
  if (c.h.f1 != identity_functor(c.j.cod)) return false;
  return is_under(kit, c.h, c.j.dom, c.j, c.j);
}

bool validate_sdr_retraction(Kit& kit, const SdrRetractionCertificate& c) {
  if (compose(c.f, c.j) != identity_functor(c.f.cod)) return false;
  if (c.h.f0 != compose(c.j, c.f)) return false;
  if (c.h.f1 != identity_functor(c.f.dom)) return false;
  return is_over(kit, c.h, c.f.cod, c.f, c.f);
}

bool validate_equivalence_certificate(Kit& kit, const EquivalenceCertificate& c) {
  (void)kit;
  if (c.f_inv.dom.get() != c.f.cod.get() || c.f_inv.cod.get() != c.f.dom.get()) return false;
  if (c.h_left.f0 != compose(c.f_inv, c.f)) return false;
  if (c.h_left.f1 != identity_functor(c.f.dom)) return false;
  if (c.h_right.f0 != compose(c.f, c.f_inv)) return false;
  if (c.h_right.f1 != identity_functor(c.f.cod)) return false;
  return true;
}

std::optional<Homotopy> find_homotopy(Kit& kit, const FunctorMap& f0, const FunctorMap& f1) {
  if (f0.dom.get() != f1.dom.get() || f0.cod.get() != f1.cod.get())
    throw std::logic_error("find_homotopy: endpoints mismatch");
  CatPtr a0 = f0.dom;
  CatPtr ca = kit.cyl(a0);
  const Product& pc = kit.cyl_product(a0);
  const IntervalStructure& iv = kit.iv();
  FunctorConstraint con = empty_constraint(*ca);
  for (int x = 0; x < a0->num_objects(); ++x) {
    con.obj[pc.obj(x, iv.o0)] = f0.obj(x);
    con.obj[pc.obj(x, iv.o1)] = f1.obj(x);
  }
  for (int u = 0; u < a0->num_arrows(); ++u) {
    con.arr[pc.arr(u, kit.I()->identity(iv.o0))] = f0.arr(u);
    con.arr[pc.arr(u, kit.I()->identity(iv.o1))] = f1.arr(u);
  }
  auto found = search_functor(ca, f0.cod, con);
  if (!found) return std::nullopt;
  return make_homotopy(kit, a0, *found);
}

std::optional<EquivalenceCertificate> find_equivalence(Kit& kit, const FunctorMap& f) {
  CatPtr a0 = f.dom, a1 = f.cod;
  for (const auto& cand : kit.functors(a1, a0)) {
    auto hl = find_homotopy(kit, compose(cand, f), identity_functor(a0));
    if (!hl) continue;
    auto hr = find_homotopy(kit, compose(f, cand), identity_functor(a1));
    if (!hr) continue;
    EquivalenceCertificate c;
    c.f = f;
    c.f_inv = cand;
    c.h_left = *hl;
    c.h_right = *hr;
    return c;
  }
  return std::nullopt;
}

EquivalenceCertificate two_of_three_first(Kit& kit, const Triangle& t,
                                          const EquivalenceCertificate& cert_f1,
                                          const EquivalenceCertificate& cert_f2) {
  if (compose(t.f1, t.f0) != t.f2) throw std::logic_error("two_of_three: triangle does not commute");
  EquivalenceCertificate c;
  c.f = t.f0;
  c.f_inv = compose(cert_f2.f_inv, t.f1);
  // f_inv∘f0 = f2_inv∘f2 extensionally, so the left homotopy transfers.
  c.h_left = cert_f2.h_left;
  if (c.h_left.f0 != compose(c.f_inv, c.f)) throw std::logic_error("two_of_three_first: h_left boundary");
  Homotopy k0 = whisker_right(kit, reverse(kit, cert_f1.h_left), compose(c.f, c.f_inv));
  Homotopy k1 = whisker(kit, cert_f1.f_inv, cert_f2.h_right, t.f1);
  c.h_right = hcompose(kit, hcompose(kit, k0, k1), cert_f1.h_left);
  return c;
}

EquivalenceCertificate two_of_three_middle(Kit& kit, const Triangle& t,
                                           const EquivalenceCertificate& cert_f0,
                                           const EquivalenceCertificate& cert_f2) {
  if (compose(t.f1, t.f0) != t.f2) throw std::logic_error("two_of_three: triangle does not commute");
  EquivalenceCertificate c;
  c.f = t.f1;
  c.f_inv = compose(t.f0, cert_f2.f_inv);
  c.h_right = cert_f2.h_right;
  if (c.h_right.f0 != compose(c.f, c.f_inv))
    throw std::logic_error("two_of_three_middle: h_right boundary");
  Homotopy k0 = whisker_left(kit, compose(c.f_inv, c.f), reverse(kit, cert_f0.h_right));
  Homotopy k1 = whisker(kit, t.f0, cert_f2.h_left, cert_f0.f_inv);
  c.h_left = hcompose(kit, hcompose(kit, k0, k1), cert_f0.h_right);
  return c;
}

EquivalenceCertificate two_of_three_composite(Kit& kit, const Triangle& t,
                                              const EquivalenceCertificate& cert_f0,
                                              const EquivalenceCertificate& cert_f1) {
  if (compose(t.f1, t.f0) != t.f2) throw std::logic_error("two_of_three: triangle does not commute");
  EquivalenceCertificate c;
  c.f = t.f2;
  c.f_inv = compose(cert_f0.f_inv, cert_f1.f_inv);
  c.h_left =
      hcompose(kit, whisker(kit, cert_f0.f_inv, cert_f1.h_left, t.f0), cert_f0.h_left);
  c.h_right =
      hcompose(kit, whisker(kit, t.f1, cert_f0.h_right, cert_f1.f_inv), cert_f1.h_right);
  return c;
}

EquivalenceCertificate right_inverse_upgrade(Kit& kit, const EquivalenceCertificate& cert_f,
                                             const FunctorMap& g, const Homotopy& fg_to_id) {
  // l : f_inv -> g, then gf -> id from l∘cyl(f) and h_left.
  Homotopy step1 = whisker_left(kit, cert_f.f_inv, reverse(kit, fg_to_id));
  Homotopy step2 = whisker_right(kit, cert_f.h_left, g);
  Homotopy l = hcompose(kit, step1, step2);
  Homotopy lf = whisker_right(kit, l, cert_f.f);
  Homotopy id_to_gf = hcompose(kit, reverse(kit, cert_f.h_left), lf);
  EquivalenceCertificate c;
  c.f = g;
  c.f_inv = cert_f.f;
  c.h_left = fg_to_id;  // f∘g -> id(cod g = dom f ... cod of g)
  c.h_right = reverse(kit, id_to_gf);
  if (!validate_equivalence_certificate(kit, c))
    throw std::logic_error("right_inverse_upgrade: certificate invalid");
  return c;
}

bool validate_retract(const RetractData& d) {
  if (compose(d.r0, d.g0) != identity_functor(d.g0.dom)) return false;
  if (compose(d.r1, d.g1) != identity_functor(d.g1.dom)) return false;
  if (compose(d.f, d.g0) != compose(d.g1, d.f_prime)) return false;
  if (compose(d.f_prime, d.r0) != compose(d.r1, d.f)) return false;
  return true;
}

EquivalenceCertificate retract_transfer(Kit& kit, const EquivalenceCertificate& cert_f,
                                        const RetractData& d) {
  if (!validate_retract(d)) throw std::logic_error("retract_transfer: retract squares invalid");
  EquivalenceCertificate c;
  c.f = d.f_prime;
  c.f_inv = compose(d.r0, compose(cert_f.f_inv, d.g1));
  c.h_left = whisker(kit, d.r0, cert_f.h_left, d.g0);
  c.h_right = whisker(kit, d.r1, cert_f.h_right, d.g1);
  if (!validate_equivalence_certificate(kit, c))
    throw std::logic_error("retract_transfer: certificate invalid");
  return c;
}

}  // namespace folk
