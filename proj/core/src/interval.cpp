#include "folk/interval.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace folk {

namespace {

CatPtr terminal_category() {
  std::vector<std::string> objects{"*"};
  std::vector<Arrow> arrows{{"id_*", 0, 0}};
  std::vector<int> identity{0};
  std::vector<int> comp{0};
  return std::make_shared<FinCat>("1", std::move(objects), std::move(arrows),
                                  std::move(identity), std::move(comp));
}

CatPtr indiscrete_category(const std::string& name, const std::vector<std::string>& objs,
                           const std::map<std::pair<int, int>, std::string>& arrow_names) {
  const int n = static_cast<int>(objs.size());
  std::vector<Arrow> arrows;
  std::vector<int> identity(n);
  for (int x = 0; x < n; ++x) {
    identity[x] = static_cast<int>(arrows.size());
    arrows.push_back({"id_" + objs[x], x, x});
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      auto it = arrow_names.find({x, y});
      std::string nm = it != arrow_names.end() ? it->second : ("a" + objs[x] + objs[y]);
      arrows.push_back({nm, x, y});
    }
  auto arrow_between = [&](int x, int y) {
    for (size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].src == x && arrows[k].tgt == y) return static_cast<int>(k);
    return -1;
  };
  const size_t na = arrows.size();
  std::vector<int> comp(na * na, -1);
  for (size_t g = 0; g < na; ++g)
    for (size_t f = 0; f < na; ++f)
      if (arrows[f].tgt == arrows[g].src)
        comp[g * na + f] = arrow_between(arrows[f].src, arrows[g].tgt);
  return std::make_shared<FinCat>(name, objs, std::move(arrows), std::move(identity),
                                  std::move(comp));
}

}  // namespace

IntervalStructure build_interval() {
  IntervalStructure iv;
  iv.one = terminal_category();
  iv.I = indiscrete_category("I", {"0", "1"}, {{{0, 1}, "f"}, {{1, 0}, "f_inv"}});
  iv.S = indiscrete_category("S", {"0", "1", "2"},
                             {{{0, 1}, "s01"},
                              {{0, 2}, "s02"},
                              {{1, 0}, "s10"},
                              {{1, 2}, "s12"},
                              {{2, 0}, "s20"},
                              {{2, 1}, "s21"}});
  iv.o0 = iv.I->object_index("0");
  iv.o1 = iv.I->object_index("1");
  iv.s0 = iv.S->object_index("0");
  iv.s1 = iv.S->object_index("1");
  iv.s2 = iv.S->object_index("2");

  iv.i0 = functor_into_indiscrete(iv.one, iv.I, {iv.o0}, "i0");
  iv.i1 = functor_into_indiscrete(iv.one, iv.I, {iv.o1}, "i1");
  iv.p = functor_into_indiscrete(iv.I, iv.one, {0, 0}, "p");
  iv.v = functor_into_indiscrete(iv.I, iv.I, {iv.o1, iv.o0}, "v");
  iv.r0 = functor_into_indiscrete(iv.I, iv.S, {iv.s0, iv.s1}, "r0");
  iv.r1 = functor_into_indiscrete(iv.I, iv.S, {iv.s1, iv.s2}, "r1");
  iv.s = functor_into_indiscrete(iv.I, iv.S, {iv.s0, iv.s2}, "s");

  iv.IxI = product(iv.I, iv.I);
  iv.IxS = product(iv.I, iv.S);

  auto gamma = [&](const std::string& name, int t00, int t01, int t10, int t11) {
    std::vector<int> obj(4);
    obj[iv.IxI.obj(iv.o0, iv.o0)] = t00;
    obj[iv.IxI.obj(iv.o0, iv.o1)] = t01;
    obj[iv.IxI.obj(iv.o1, iv.o0)] = t10;
    obj[iv.IxI.obj(iv.o1, iv.o1)] = t11;
    return functor_into_indiscrete(iv.IxI.cat, iv.I, std::move(obj), name);
  };
  // gul = max, glr = min, gur(t1,t2) = min(t1, v(t2)).
  iv.gul = gamma("gul", iv.o0, iv.o1, iv.o1, iv.o1);
  iv.glr = gamma("glr", iv.o0, iv.o0, iv.o0, iv.o1);
  iv.gur = gamma("gur", iv.o0, iv.o0, iv.o1, iv.o0);

  // Derived arrows, by their defining equations on the two copies of I
  // inside S: ql∘r0 = i0∘p, ql∘r1 = id; qr∘r0 = id, qr∘r1 = i1∘p;
  // w∘r0 = v, w∘r1 = id.
  auto from_s = [&](const std::string& name, int at0, int at1, int at2) {
    return functor_into_indiscrete(iv.S, iv.I, {at0, at1, at2}, name);
  };
  iv.ql = from_s("ql", iv.o0, iv.o0, iv.o1);
  iv.qr = from_s("qr", iv.o0, iv.o1, iv.o1);
  iv.w = from_s("w", iv.o1, iv.o0, iv.o1);
  iv.pbar = functor_into_indiscrete(iv.S, iv.one, {0, 0, 0}, "pbar");

  // x : I x S -> I, with x∘(I x r0) = gur and x∘(I x r1) = glr.
  std::vector<int> xobj(static_cast<size_t>(iv.IxS.cat->num_objects()));
  auto gur_at = [&](int t, int u) { return iv.gur.obj(iv.IxI.obj(t, u)); };
  auto glr_at = [&](int t, int u) { return iv.glr.obj(iv.IxI.obj(t, u)); };
  for (int t = 0; t < 2; ++t) {
    xobj[iv.IxS.obj(t, iv.s0)] = gur_at(t, iv.o0);
    xobj[iv.IxS.obj(t, iv.s1)] = gur_at(t, iv.o1);  // equals glr_at(t, 0) on the glue
    xobj[iv.IxS.obj(t, iv.s2)] = glr_at(t, iv.o1);
  }
  iv.x = functor_into_indiscrete(iv.IxS.cat, iv.I, std::move(xobj), "x");
  return iv;
}

Kit::Kit() : iv_(build_interval()) {
  keep(iv_.one);
  keep(iv_.I);
  keep(iv_.S);
  keep(iv_.IxI.cat);
  keep(iv_.IxS.cat);
}

FunctorMap Kit::bang(CatPtr a) {
  FunctorMap f;
  f.dom = a;
  f.cod = iv_.one;
  f.obj_map.assign(a->num_objects(), 0);
  f.arr_map.assign(a->num_arrows(), 0);
  f.name = "!" + a->name();
  return f;
}

FunctorMap Kit::pick(CatPtr a, int obj) {
  FunctorMap f;
  f.dom = iv_.one;
  f.cod = a;
  f.obj_map = {obj};
  f.arr_map = {a->identity(obj)};
  f.name = "pick_" + a->object_name(obj);
  return f;
}

const Product& Kit::cyl_product(CatPtr a) {
  auto it = cyl_.find(a.get());
  if (it != cyl_.end()) return it->second;
  keep(a);
  Product p = product(a, iv_.I);
  keep(p.cat);
  return cyl_.emplace(a.get(), std::move(p)).first->second;
}

CatPtr Kit::cyl(CatPtr a) { return cyl_product(a).cat; }

const Product& Kit::sdv_product(CatPtr a) {
  auto it = sdv_.find(a.get());
  if (it != sdv_.end()) return it->second;
  keep(a);
  Product p = product(a, iv_.S);
  keep(p.cat);
  return sdv_.emplace(a.get(), std::move(p)).first->second;
}

CatPtr Kit::sdv(CatPtr a) { return sdv_product(a).cat; }

FunctorMap Kit::i0(CatPtr a) {
  const Product& p = cyl_product(a);
  return pairing(p, identity_functor(a), compose(iv_.i0, bang(a)));
}

FunctorMap Kit::i1(CatPtr a) {
  const Product& p = cyl_product(a);
  return pairing(p, identity_functor(a), compose(iv_.i1, bang(a)));
}

FunctorMap Kit::p(CatPtr a) { return cyl_product(a).proj1; }

FunctorMap Kit::v(CatPtr a) {
  const Product& p = cyl_product(a);
  return product_map(p, p, identity_functor(a), iv_.v);
}

FunctorMap Kit::r0(CatPtr a) { return product_map(cyl_product(a), sdv_product(a), identity_functor(a), iv_.r0); }
FunctorMap Kit::r1(CatPtr a) { return product_map(cyl_product(a), sdv_product(a), identity_functor(a), iv_.r1); }
FunctorMap Kit::s(CatPtr a) { return product_map(cyl_product(a), sdv_product(a), identity_functor(a), iv_.s); }
FunctorMap Kit::ql(CatPtr a) { return product_map(sdv_product(a), cyl_product(a), identity_functor(a), iv_.ql); }
FunctorMap Kit::qr(CatPtr a) { return product_map(sdv_product(a), cyl_product(a), identity_functor(a), iv_.qr); }
FunctorMap Kit::w(CatPtr a) { return product_map(sdv_product(a), cyl_product(a), identity_functor(a), iv_.w); }
FunctorMap Kit::pbar(CatPtr a) { return sdv_product(a).proj1; }

namespace {

// Builds the connection at a: cyl(cyl(a)) -> cyl(a) sending
// ((x,t1),t2) to (x, gamma(t1,t2)).
FunctorMap connection_at(Kit& kit, CatPtr a, const FunctorMap& gamma_iv, const std::string& name) {
  const Product& pc = kit.cyl_product(a);
  CatPtr ca = pc.cat;
  const Product& pc2 = kit.cyl_product(ca);
  const Product& ixi = kit.iv().IxI;
  FunctorMap g;
  g.dom = pc2.cat;
  g.cod = ca;
  g.obj_map.resize(pc2.cat->num_objects());
  g.arr_map.resize(pc2.cat->num_arrows());
  for (int o = 0; o < pc2.cat->num_objects(); ++o) {
    int inner = pc2.obj1(o), t2 = pc2.obj2(o);
    int x = pc.obj1(inner), t1 = pc.obj2(inner);
    g.obj_map[o] = pc.obj(x, gamma_iv.obj(ixi.obj(t1, t2)));
  }
  for (int m = 0; m < pc2.cat->num_arrows(); ++m) {
    int inner = pc2.arr1(m), w2 = pc2.arr2(m);
    int u = pc.arr1(inner), w1 = pc.arr2(inner);
    g.arr_map[m] = pc.arr(u, gamma_iv.arr(ixi.arr(w1, w2)));
  }
  g.name = name + "(" + a->name() + ")";
  return g;
}

}  // namespace

FunctorMap Kit::gul(CatPtr a) { return connection_at(*this, a, iv_.gul, "gul"); }
FunctorMap Kit::glr(CatPtr a) { return connection_at(*this, a, iv_.glr, "glr"); }
FunctorMap Kit::gur(CatPtr a) { return connection_at(*this, a, iv_.gur, "gur"); }

FunctorMap Kit::cylF(const FunctorMap& f) {
  return product_map(cyl_product(f.dom), cyl_product(f.cod), f, identity_functor(iv_.I));
}

FunctorMap Kit::sdvF(const FunctorMap& f) {
  return product_map(sdv_product(f.dom), sdv_product(f.cod), f, identity_functor(iv_.S));
}

const Exponential& Kit::cocyl_exponential(CatPtr a) {
  auto it = cocyl_.find(a.get());
  if (it != cocyl_.end()) return it->second;
  keep(a);
  Exponential e = exponential_by(iv_.I, a);
  keep(e.cat);
  return cocyl_.emplace(a.get(), std::move(e)).first->second;
}

CatPtr Kit::cocyl(CatPtr a) { return cocyl_exponential(a).cat; }

FunctorMap Kit::e0(CatPtr a) {
  const Exponential& e = cocyl_exponential(a);
  FunctorMap f;
  f.dom = e.cat;
  f.cod = a;
  for (const auto& F : e.objects) f.obj_map.push_back(F.obj(iv_.o0));
  for (const auto& n : e.arrows) f.arr_map.push_back(n.components[iv_.o0]);
  f.name = "e0(" + a->name() + ")";
  return f;
}

FunctorMap Kit::e1(CatPtr a) {
  const Exponential& e = cocyl_exponential(a);
  FunctorMap f;
  f.dom = e.cat;
  f.cod = a;
  for (const auto& F : e.objects) f.obj_map.push_back(F.obj(iv_.o1));
  for (const auto& n : e.arrows) f.arr_map.push_back(n.components[iv_.o1]);
  f.name = "e1(" + a->name() + ")";
  return f;
}

FunctorMap Kit::c(CatPtr a) {
  const Exponential& e = cocyl_exponential(a);
  FunctorMap f;
  f.dom = a;
  f.cod = e.cat;
  for (int x = 0; x < a->num_objects(); ++x) {
    FunctorMap cf;
    cf.dom = iv_.I;
    cf.cod = a;
    cf.obj_map = {x, x};
    cf.arr_map.resize(iv_.I->num_arrows());
    for (int w = 0; w < iv_.I->num_arrows(); ++w) cf.arr_map[w] = a->identity(x);
    int idx = e.object_index(cf);
    if (idx < 0) throw std::logic_error("c: constant functor missing from exponential");
    f.obj_map.push_back(idx);
  }
  for (int u = 0; u < a->num_arrows(); ++u) {
    std::vector<int> comps{u, u};
    int idx = e.arrow_index(f.obj_map[a->src(u)], f.obj_map[a->tgt(u)], comps);
    if (idx < 0) throw std::logic_error("c: constant transformation missing from exponential");
    f.arr_map.push_back(idx);
  }
  f.name = "c(" + a->name() + ")";
  return f;
}

FunctorMap Kit::cocylF(const FunctorMap& f) {
  const Exponential& ea = cocyl_exponential(f.dom);
  const Exponential& eb = cocyl_exponential(f.cod);
  FunctorMap out;
  out.dom = ea.cat;
  out.cod = eb.cat;
  for (const auto& F : ea.objects) {
    int idx = eb.object_index(compose(f, F));
    if (idx < 0) throw std::logic_error("cocylF: missing object");
    out.obj_map.push_back(idx);
  }
  for (int m = 0; m < ea.cat->num_arrows(); ++m) {
    std::vector<int> comps;
    for (int cmp : ea.arrows[m].components) comps.push_back(f.arr(cmp));
    int idx = eb.arrow_index(out.obj_map[ea.cat->src(m)], out.obj_map[ea.cat->tgt(m)], comps);
    if (idx < 0) throw std::logic_error("cocylF: missing arrow");
    out.arr_map.push_back(idx);
  }
  out.name = "cocyl(" + f.name + ")";
  return out;
}

FunctorMap Kit::adj(const FunctorMap& h) {
  // h : a x I -> b.
  CatPtr b = h.cod;
  const Exponential& e = cocyl_exponential(b);
  // Recover a from the cached product instance.
  CatPtr hdom = h.dom;
  CatPtr a;
  for (auto& [key, prod] : cyl_) {
    if (prod.cat.get() == hdom.get()) {
      a = keepalive_.at(key);
      break;
    }
  }
  if (!a) throw std::logic_error("adj: domain is not a cached cylinder");
  const Product& pc = cyl_product(a);
  FunctorMap out;
  out.dom = a;
  out.cod = e.cat;
  for (int x = 0; x < a->num_objects(); ++x) {
    FunctorMap F;
    F.dom = iv_.I;
    F.cod = b;
    F.obj_map = {h.obj(pc.obj(x, iv_.o0)), h.obj(pc.obj(x, iv_.o1))};
    F.arr_map.resize(iv_.I->num_arrows());
    for (int w = 0; w < iv_.I->num_arrows(); ++w)
      F.arr_map[w] = h.arr(pc.arr(a->identity(x), w));
    int idx = e.object_index(F);
    if (idx < 0) throw std::logic_error("adj: transposed object missing");
    out.obj_map.push_back(idx);
  }
  for (int u = 0; u < a->num_arrows(); ++u) {
    std::vector<int> comps(iv_.I->num_objects());
    for (int t = 0; t < iv_.I->num_objects(); ++t)
      comps[t] = h.arr(pc.arr(u, iv_.I->identity(t)));
    int idx = e.arrow_index(out.obj_map[a->src(u)], out.obj_map[a->tgt(u)], comps);
    if (idx < 0) throw std::logic_error("adj: transposed arrow missing");
    out.arr_map.push_back(idx);
  }
  out.name = "adj(" + h.name + ")";
  return out;
}

FunctorMap Kit::adj_inv(const FunctorMap& k) {
  // k : a -> b^I.
  CatPtr a = k.dom;
  const Exponential* e = nullptr;
  CatPtr b;
  for (auto& [key, exp] : cocyl_) {
    if (exp.cat.get() == k.cod.get()) {
      e = &exp;
      b = keepalive_.at(key);
      break;
    }
  }
  if (!e) throw std::logic_error("adj_inv: codomain is not a cached co-cylinder");
  const Product& pc = cyl_product(a);
  FunctorMap out;
  out.dom = pc.cat;
  out.cod = b;
  out.obj_map.resize(pc.cat->num_objects());
  out.arr_map.resize(pc.cat->num_arrows());
  for (int o = 0; o < pc.cat->num_objects(); ++o) {
    int x = pc.obj1(o), t = pc.obj2(o);
    out.obj_map[o] = e->objects[k.obj(x)].obj(t);
  }
  for (int m = 0; m < pc.cat->num_arrows(); ++m) {
    int u = pc.arr1(m), w = pc.arr2(m);
    const NatTrans& nt = e->arrows[k.arr(u)];
    const FunctorMap& Fsrc = e->objects[k.obj(a->src(u))];
    out.arr_map[m] = b->compose(nt.components[iv_.I->tgt(w)], Fsrc.arr(w));
  }
  out.name = "adj_inv(" + k.name + ")";
  return out;
}

const std::vector<FunctorMap>& Kit::functors(CatPtr a, CatPtr b) {
  auto key = std::make_pair(a.get(), b.get());
  auto it = functors_.find(key);
  if (it != functors_.end()) return it->second;
  keep(a);
  keep(b);
  return functors_.emplace(key, enumerate_functors(a, b)).first->second;
}

MappingCylinder mapping_cylinder(Kit& kit, const FunctorMap& f) {
  CatPtr a0 = f.dom;
  CatPtr a1 = f.cod;
  MappingCylinder mc;
  mc.f = f;
  std::vector<std::string> objects;
  for (int x = 0; x < a0->num_objects(); ++x) {
    mc.obj_kind.push_back(0);
    mc.obj_of.push_back(x);
    mc.bar_obj.push_back(f.obj(x));
    mc.left_obj.push_back(static_cast<int>(objects.size()));
    objects.push_back("l_" + a0->object_name(x));
  }
  for (int y = 0; y < a1->num_objects(); ++y) {
    mc.obj_kind.push_back(1);
    mc.obj_of.push_back(y);
    mc.bar_obj.push_back(y);
    mc.right_obj.push_back(static_cast<int>(objects.size()));
    objects.push_back("r_" + a1->object_name(y));
  }
  const int nm = static_cast<int>(objects.size());
  // Position of each a1 arrow within its hom-set, in index order.
  std::vector<int> hom_pos(a1->num_arrows(), 0);
  {
    std::vector<int> counter(static_cast<size_t>(a1->num_objects()) * a1->num_objects(), 0);
    for (int b = 0; b < a1->num_arrows(); ++b) {
      size_t key = static_cast<size_t>(a1->src(b)) * a1->num_objects() + a1->tgt(b);
      hom_pos[b] = counter[key]++;
    }
  }
  std::vector<Arrow> arrows;
  std::vector<int> beta;
  std::vector<int> block_base(static_cast<size_t>(nm) * nm, -1);
  for (int w = 0; w < nm; ++w)
    for (int w2 = 0; w2 < nm; ++w2) {
      block_base[static_cast<size_t>(w) * nm + w2] = static_cast<int>(arrows.size());
      for (int b : a1->hom(mc.bar_obj[w], mc.bar_obj[w2])) {
        Arrow ar;
        ar.name = "k" + std::to_string(arrows.size());
        ar.src = w;
        ar.tgt = w2;
        arrows.push_back(ar);
        beta.push_back(b);
      }
    }
  mc.beta = beta;
  mc.block_base = block_base;
  mc.hom_pos = hom_pos;
  auto arrow_at = [&](int srcm, int tgtm, int b) {
    return block_base[static_cast<size_t>(srcm) * nm + tgtm] + hom_pos[b];
  };
  std::vector<int> identity(nm, -1);
  for (int w = 0; w < nm; ++w) identity[w] = arrow_at(w, w, a1->identity(mc.bar_obj[w]));
  const size_t na = arrows.size();
  std::vector<int> comp(na * na, -1);
  for (size_t g = 0; g < na; ++g)
    for (size_t h = 0; h < na; ++h) {
      if (arrows[h].tgt != arrows[g].src) continue;
      comp[g * na + h] = arrow_at(arrows[h].src, arrows[g].tgt, a1->compose(beta[g], beta[h]));
    }
  mc.M = std::make_shared<FinCat>("M(" + f.name + ")", std::move(objects), std::move(arrows),
                                  std::move(identity), std::move(comp));

  const Product& pc0 = kit.cyl_product(a0);
  FunctorMap d0;
  d0.dom = pc0.cat;
  d0.cod = mc.M;
  d0.obj_map.resize(pc0.cat->num_objects());
  d0.arr_map.resize(pc0.cat->num_arrows());
  const int o0 = kit.iv().o0;
  for (int o = 0; o < pc0.cat->num_objects(); ++o) {
    int x = pc0.obj1(o), t = pc0.obj2(o);
    d0.obj_map[o] = (t == o0) ? mc.right_obj[f.obj(x)] : mc.left_obj[x];
  }
  for (int m = 0; m < pc0.cat->num_arrows(); ++m) {
    int u = pc0.arr1(m);
    int so = d0.obj_map[pc0.cat->src(m)], to = d0.obj_map[pc0.cat->tgt(m)];
    d0.arr_map[m] = mc.arrow_at(so, to, f.arr(u));
  }
  d0.name = "d0(" + f.name + ")";
  mc.d0 = std::move(d0);

  FunctorMap d1;
  d1.dom = a1;
  d1.cod = mc.M;
  for (int y = 0; y < a1->num_objects(); ++y) d1.obj_map.push_back(mc.right_obj[y]);
  for (int u = 0; u < a1->num_arrows(); ++u)
    d1.arr_map.push_back(mc.arrow_at(mc.right_obj[a1->src(u)], mc.right_obj[a1->tgt(u)], u));
  d1.name = "d1(" + f.name + ")";
  mc.d1 = std::move(d1);
  return mc;
}

FunctorMap mc_induce(Kit& kit, const MappingCylinder& mc, const FunctorMap& leg_cyl,
                     const FunctorMap& leg_cod) {
  CatPtr a0 = mc.f.dom;
  CatPtr a1 = mc.f.cod;
  const Product& pc0 = kit.cyl_product(a0);
  if (leg_cyl.dom.get() != pc0.cat.get() || leg_cod.dom.get() != a1.get() ||
      leg_cyl.cod.get() != leg_cod.cod.get())
    throw std::logic_error("mc_induce: leg shapes");
  if (compose(leg_cyl, kit.i0(a0)) != compose(leg_cod, mc.f))
    throw std::logic_error("mc_induce: legs do not glue");
  const FinCat& E = *leg_cyl.cod;
  const int o0 = kit.iv().o0, o1 = kit.iv().o1;
  const FinCat& I = *kit.I();
  FunctorMap u;
  u.dom = mc.M;
  u.cod = leg_cyl.cod;
  u.obj_map.resize(mc.M->num_objects());
  for (int w = 0; w < mc.M->num_objects(); ++w)
    u.obj_map[w] = mc.obj_kind[w] == 0 ? leg_cyl.obj(pc0.obj(mc.obj_of[w], o1))
                                       : leg_cod.obj(mc.obj_of[w]);
  // Every M arrow decomposes as c_{x'}^{-1} ∘ d1(beta) ∘ c_x where
  // c_x = d0(x, 1 -> 0); map the pieces through the legs.
  int down = I.unique_arrow(o1, o0);  // 1 -> 0
  int up = I.unique_arrow(o0, o1);    // 0 -> 1
  u.arr_map.resize(mc.M->num_arrows());
  for (int m = 0; m < mc.M->num_arrows(); ++m) {
    int sw = mc.M->src(m), tw = mc.M->tgt(m);
    int e = leg_cod.arr(mc.beta[m]);
    if (mc.obj_kind[sw] == 0) {
      int cx = leg_cyl.arr(pc0.arr(a0->identity(mc.obj_of[sw]), down));
      e = E.compose(e, cx);
    }
    if (mc.obj_kind[tw] == 0) {
      int cxi = leg_cyl.arr(pc0.arr(a0->identity(mc.obj_of[tw]), up));
      e = E.compose(cxi, e);
    }
    u.arr_map[m] = e;
  }
  u.name = "[" + leg_cyl.name + ";" + leg_cod.name + "]";
  ValidationReport rep = validate(u);
  if (!rep.pass()) throw std::logic_error("mc_induce: induced map not a functor: " + rep.summary());
  if (compose(u, mc.d0) != leg_cyl || compose(u, mc.d1) != leg_cod)
    throw std::logic_error("mc_induce: legs not recovered");
  return u;
}

FunctorMap mc_cyl_induce(Kit& kit, const MappingCylinder& mc, const FunctorMap& leg_cyl2,
                         const FunctorMap& leg_cyl_cod) {
  CatPtr a0 = mc.f.dom;
  CatPtr a1 = mc.f.cod;
  const Product& pc0 = kit.cyl_product(a0);
  const Product& pcm = kit.cyl_product(mc.M);
  const Product& pc02 = kit.cyl_product(pc0.cat);
  const Product& pc1 = kit.cyl_product(a1);
  if (leg_cyl2.dom.get() != pc02.cat.get() || leg_cyl_cod.dom.get() != pc1.cat.get() ||
      leg_cyl2.cod.get() != leg_cyl_cod.cod.get())
    throw std::logic_error("mc_cyl_induce: leg shapes");
  if (compose(leg_cyl2, kit.cylF(kit.i0(a0))) != compose(leg_cyl_cod, kit.cylF(mc.f)))
    throw std::logic_error("mc_cyl_induce: legs do not glue");
  const FinCat& E = *leg_cyl2.cod;
  const FinCat& I = *kit.I();
  const int o0 = kit.iv().o0, o1 = kit.iv().o1;
  int down = I.unique_arrow(o1, o0), up = I.unique_arrow(o0, o1);
  FunctorMap u;
  u.dom = pcm.cat;
  u.cod = leg_cyl2.cod;
  u.obj_map.resize(pcm.cat->num_objects());
  for (int o = 0; o < pcm.cat->num_objects(); ++o) {
    int w = pcm.obj1(o), t = pcm.obj2(o);
    u.obj_map[o] = mc.obj_kind[w] == 0
                       ? leg_cyl2.obj(pc02.obj(pc0.obj(mc.obj_of[w], o1), t))
                       : leg_cyl_cod.obj(pc1.obj(mc.obj_of[w], t));
  }
  u.arr_map.resize(pcm.cat->num_arrows());
  for (int m = 0; m < pcm.cat->num_arrows(); ++m) {
    int alpha = pcm.arr1(m), wi = pcm.arr2(m);
    int sw = mc.M->src(alpha), tw = mc.M->tgt(alpha);
    int ti = I.src(wi), ti2 = I.tgt(wi);
    // (alpha, wi) = (c_{x'}^{-1}, id_{t'}) ∘ (d1(beta), wi) ∘ (c_x, id_t).
    int e = leg_cyl_cod.arr(pc1.arr(mc.beta[alpha], wi));
    if (mc.obj_kind[sw] == 0) {
      int cx = leg_cyl2.arr(pc02.arr(pc0.arr(a0->identity(mc.obj_of[sw]), down), I.identity(ti)));
      e = E.compose(e, cx);
    }
    if (mc.obj_kind[tw] == 0) {
      int cxi = leg_cyl2.arr(pc02.arr(pc0.arr(a0->identity(mc.obj_of[tw]), up), I.identity(ti2)));
      e = E.compose(cxi, e);
    }
    u.arr_map[m] = e;
  }
  u.name = "[cyl:" + leg_cyl2.name + ";" + leg_cyl_cod.name + "]";
  ValidationReport rep = validate(u);
  if (!rep.pass())
    throw std::logic_error("mc_cyl_induce: induced map not a functor: " + rep.summary());
  if (compose(u, kit.cylF(mc.d0)) != leg_cyl2 || compose(u, kit.cylF(mc.d1)) != leg_cyl_cod)
    throw std::logic_error("mc_cyl_induce: legs not recovered");
  return u;
}

FunctorMap canonical_m(Kit& kit, const MappingCylinder& mc) {
  FunctorMap m = mc_induce(kit, mc, kit.cylF(mc.f), kit.i0(mc.f.cod));
  m.name = "m(" + mc.f.name + ")";
  return m;
}

MappingCoCylinder mapping_cocylinder(Kit& kit, const FunctorMap& f) {
  MappingCoCylinder mcc;
  mcc.f = f;
  Cospan cs;
  cs.left = f;
  cs.right = kit.e0(f.cod);
  mcc.pb = pullback(cs);
  mcc.d0 = mcc.pb.to_a;
  mcc.d0.name = "d0(" + f.name + ")";
  mcc.d1 = mcc.pb.to_b;
  mcc.d1.name = "d1(" + f.name + ")";
  return mcc;
}

FunctorMap cocyl_m(Kit& kit, const MappingCoCylinder& mcc) {
  FunctorMap m =
      pullback_induce(mcc.pb, kit.e0(mcc.f.dom), kit.cocylF(mcc.f));
  m.name = "m_cocyl(" + mcc.f.name + ")";
  return m;
}

FunctorMap sdv_cyl_induce(Kit& kit, CatPtr a, const FunctorMap& leg_r0,
                          const FunctorMap& leg_r1) {
  const Product& pc = kit.cyl_product(a);
  const Product& pc2 = kit.cyl_product(pc.cat);
  const Product& ps = kit.sdv_product(a);
  const Product& pcs = kit.cyl_product(ps.cat);
  if (leg_r0.dom.get() != pc2.cat.get() || leg_r1.dom.get() != pc2.cat.get() ||
      leg_r0.cod.get() != leg_r1.cod.get())
    throw std::logic_error("sdv_cyl_induce: leg shapes");
  if (compose(leg_r0, kit.cylF(kit.i1(a))) != compose(leg_r1, kit.cylF(kit.i0(a))))
    throw std::logic_error("sdv_cyl_induce: legs do not glue");
  const FinCat& E = *leg_r0.cod;
  const IntervalStructure& iv = kit.iv();
  const FinCat& S = *kit.S();
  const FinCat& I = *kit.I();
  FunctorMap u;
  u.dom = pcs.cat;
  u.cod = leg_r0.cod;
  u.obj_map.resize(pcs.cat->num_objects());
  auto seg_obj = [&](int sigma) {
    // Returns {which leg, inner I object}.
    if (sigma == iv.s0) return std::pair<int, int>(0, iv.o0);
    if (sigma == iv.s1) return std::pair<int, int>(0, iv.o1);
    return std::pair<int, int>(1, iv.o1);
  };
  auto obj_at = [&](int x, int sigma, int t) {
    auto [leg, ti] = seg_obj(sigma);
    const FunctorMap& L = leg == 0 ? leg_r0 : leg_r1;
    return L.obj(pc2.obj(pc.obj(x, ti), t));
  };
  for (int o = 0; o < pcs.cat->num_objects(); ++o) {
    int inner = pcs.obj1(o), t = pcs.obj2(o);
    u.obj_map[o] = obj_at(ps.obj1(inner), ps.obj2(inner), t);
  }
  u.arr_map.resize(pcs.cat->num_arrows());
  // Maps an S-segment arrow lying in one leg.
  auto leg_arr = [&](int leg, int uarr, int wfrom, int wto, int wi) {
    const FunctorMap& L = leg == 0 ? leg_r0 : leg_r1;
    return L.arr(pc2.arr(pc.arr(uarr, I.unique_arrow(wfrom, wto)), wi));
  };
  for (int m = 0; m < pcs.cat->num_arrows(); ++m) {
    int inner = pcs.arr1(m), wi = pcs.arr2(m);
    int uarr = ps.arr1(inner), ws = ps.arr2(inner);
    int sfrom = S.src(ws), sto = S.tgt(ws);
    // Crossing arrows factor through the glue object s1.
    bool from_in0 = (sfrom == iv.s0 || sfrom == iv.s1);
    bool from_in1 = (sfrom == iv.s1 || sfrom == iv.s2);
    bool to_in0 = (sto == iv.s0 || sto == iv.s1);
    bool to_in1 = (sto == iv.s1 || sto == iv.s2);
    if (from_in0 && to_in0) {
      u.arr_map[m] = leg_arr(0, uarr, (sfrom == iv.s0 ? iv.o0 : iv.o1),
                             (sto == iv.s0 ? iv.o0 : iv.o1), wi);
    } else if (from_in1 && to_in1) {
      u.arr_map[m] = leg_arr(1, uarr, (sfrom == iv.s1 ? iv.o0 : iv.o1),
                             (sto == iv.s1 ? iv.o0 : iv.o1), wi);
    } else if (sfrom == iv.s0 && sto == iv.s2) {
      // (u, 0 -> 2, wi) = (id, 1 -> 2, id_t') ∘ (u, 0 -> 1, wi)
      int xq = a->tgt(uarr);
      int second = leg_arr(1, a->identity(xq), iv.o0, iv.o1, I.identity(I.tgt(wi)));
      int first = leg_arr(0, uarr, iv.o0, iv.o1, wi);
      u.arr_map[m] = E.compose(second, first);
    } else {  // sfrom == s2, sto == s0
      int xs = a->src(uarr);
      int first = leg_arr(1, a->identity(xs), iv.o1, iv.o0, I.identity(I.src(wi)));
      int second = leg_arr(0, uarr, iv.o1, iv.o0, wi);
      u.arr_map[m] = E.compose(second, first);
    }
  }
  u.name = "[sdvcyl:" + leg_r0.name + ";" + leg_r1.name + "]";
  ValidationReport rep = validate(u);
  if (!rep.pass())
    throw std::logic_error("sdv_cyl_induce: induced map not a functor: " + rep.summary());
  if (compose(u, kit.cylF(kit.r0(a))) != leg_r0 || compose(u, kit.cylF(kit.r1(a))) != leg_r1)
    throw std::logic_error("sdv_cyl_induce: legs not recovered");
  return u;
}

bool subdivision_pushout_bijection(Kit& kit, CatPtr a, CatPtr t) {
  const std::vector<FunctorMap>& from_s = kit.functors(kit.sdv(a), t);
  FunctorMap ra = kit.r0(a), rb = kit.r1(a);
  FunctorMap ia = kit.i1(a), ib = kit.i0(a);
  // Count compatible pairs (F on the r0 copy, G on the r1 copy) with
  // F∘i1 = G∘i0, and check precomposition with (r0, r1) is a bijection.
  const std::vector<FunctorMap>& from_c = kit.functors(kit.cyl(a), t);
  size_t pairs = 0;
  for (const auto& F : from_c)
    for (const auto& G : from_c)
      if (compose(F, ia) == compose(G, ib)) ++pairs;
  if (pairs != from_s.size()) return false;
  std::vector<std::pair<FunctorMap, FunctorMap>> images;
  for (const auto& u : from_s) {
    auto im = std::make_pair(compose(u, ra), compose(u, rb));
    for (const auto& seen : images)
      if (seen.first == im.first && seen.second == im.second) return false;
    images.push_back(im);
  }
  return true;
}

bool mapping_cylinder_bijection(Kit& kit, const MappingCylinder& mc, CatPtr t) {
  const std::vector<FunctorMap>& from_m = kit.functors(mc.M, t);
  const std::vector<FunctorMap>& from_c = kit.functors(kit.cyl(mc.f.dom), t);
  const std::vector<FunctorMap>& from_a1 = kit.functors(mc.f.cod, t);
  FunctorMap i0 = kit.i0(mc.f.dom);
  size_t pairs = 0;
  for (const auto& K : from_c)
    for (const auto& L : from_a1)
      if (compose(K, i0) == compose(L, mc.f)) ++pairs;
  if (pairs != from_m.size()) return false;
  std::vector<std::pair<FunctorMap, FunctorMap>> images;
  for (const auto& u : from_m) {
    auto im = std::make_pair(compose(u, mc.d0), compose(u, mc.d1));
    for (const auto& seen : images)
      if (seen.first == im.first && seen.second == im.second) return false;
    images.push_back(im);
  }
  return true;
}

bool cyl_mapping_cylinder_bijection(Kit& kit, const MappingCylinder& mc, CatPtr t) {
  CatPtr a0 = mc.f.dom, a1 = mc.f.cod;
  const std::vector<FunctorMap>& from_m = kit.functors(kit.cyl(mc.M), t);
  const std::vector<FunctorMap>& from_c2 = kit.functors(kit.cyl2(a0), t);
  const std::vector<FunctorMap>& from_c1 = kit.functors(kit.cyl(a1), t);
  FunctorMap glue_l = kit.cylF(kit.i0(a0)), glue_r = kit.cylF(mc.f);
  size_t pairs = 0;
  for (const auto& K : from_c2)
    for (const auto& L : from_c1)
      if (compose(K, glue_l) == compose(L, glue_r)) ++pairs;
  if (pairs != from_m.size()) return false;
  FunctorMap cd0 = kit.cylF(mc.d0), cd1 = kit.cylF(mc.d1);
  std::vector<std::pair<FunctorMap, FunctorMap>> images;
  for (const auto& u : from_m) {
    auto im = std::make_pair(compose(u, cd0), compose(u, cd1));
    for (const auto& seen : images)
      if (seen.first == im.first && seen.second == im.second) return false;
    images.push_back(im);
  }
  return true;
}

bool pullback_bijection(Kit& kit, const PullbackCat& pb, CatPtr t) {
  const std::vector<FunctorMap>& into_p = kit.functors(t, pb.cat);
  const std::vector<FunctorMap>& into_a = kit.functors(t, pb.cospan.left.dom);
  const std::vector<FunctorMap>& into_b = kit.functors(t, pb.cospan.right.dom);
  size_t pairs = 0;
  for (const auto& u : into_a)
    for (const auto& w : into_b)
      if (compose(pb.cospan.left, u) == compose(pb.cospan.right, w)) ++pairs;
  if (pairs != into_p.size()) return false;
  std::vector<std::pair<FunctorMap, FunctorMap>> images;
  for (const auto& u : into_p) {
    auto im = std::make_pair(compose(pb.to_a, u), compose(pb.to_b, u));
    for (const auto& seen : images)
      if (seen.first == im.first && seen.second == im.second) return false;
    images.push_back(im);
  }
  return true;
}

Report verify_interval(Kit& kit, const std::vector<CatPtr>& family) {
  return verify_interval_structure(kit, kit.iv(), family);
}

Report verify_interval_structure(Kit& kit, const IntervalStructure& iv,
                                 const std::vector<CatPtr>& family) {
  Report rep;
  rep.title = "interval verify";
  auto eq = [&](const std::string& name, const FunctorMap& a, const FunctorMap& b) {
    rep.add(name, a == b, a == b ? "" : "functors differ: " + a.name + " vs " + b.name);
  };
  FunctorMap idI = identity_functor(iv.I);
  FunctorMap id1 = identity_functor(iv.one);

  eq("contraction.left", compose(iv.p, iv.i0), id1);
  eq("contraction.right", compose(iv.p, iv.i1), id1);
  eq("involution.i0", compose(iv.v, iv.i0), iv.i1);
  eq("involution.i1", compose(iv.v, iv.i1), iv.i0);
  eq("involution.p_compat", compose(iv.p, iv.v), iv.p);

  eq("subdivision.glue", compose(iv.r0, iv.i1), compose(iv.r1, iv.i0));
  eq("subdivision.s_i0", compose(iv.s, iv.i0), compose(iv.r0, iv.i0));
  eq("subdivision.s_i1", compose(iv.s, iv.i1), compose(iv.r1, iv.i1));
  eq("subdivision.pbar_r0", compose(iv.pbar, iv.r0), iv.p);
  eq("subdivision.pbar_r1", compose(iv.pbar, iv.r1), iv.p);
  eq("subdivision.p_compat", compose(iv.pbar, iv.s), iv.p);
  {
    bool ok = true;
    std::string w;
    for (const auto& t : family)
      if (!subdivision_pushout_bijection(kit, kit.one(), t)) {
        ok = false;
        w = "fails over " + t->name();
        break;
      }
    rep.add("subdivision.pushout_bijection", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    std::vector<CatPtr> bases{kit.one(), kit.I()};
    for (const auto& a : bases) {
      for (const auto& t : family)
        if (!subdivision_pushout_bijection(kit, a, t)) {
          ok = false;
          w = "fails for base " + a->name() + " over " + t->name();
          break;
        }
      if (!ok) break;
    }
    rep.add("subdivision.requirement_cyl_pushout", ok, w);
  }

  // Connection axioms at the interval level, in (inner, outer) slots.
  auto slot0 = [&](const FunctorMap& g) {  // g∘(i0 x I): I -> I
    std::vector<int> obj(2);
    obj[iv.o0] = g.obj(iv.IxI.obj(iv.o0, iv.o0));
    obj[iv.o1] = g.obj(iv.IxI.obj(iv.o0, iv.o1));
    return functor_into_indiscrete(iv.I, iv.I, obj);
  };
  auto slot1 = [&](const FunctorMap& g) {  // g∘(i1 x I)
    std::vector<int> obj(2);
    obj[iv.o0] = g.obj(iv.IxI.obj(iv.o1, iv.o0));
    obj[iv.o1] = g.obj(iv.IxI.obj(iv.o1, iv.o1));
    return functor_into_indiscrete(iv.I, iv.I, obj);
  };
  auto slot0b = [&](const FunctorMap& g) {  // g∘(I x i0)
    std::vector<int> obj(2);
    obj[iv.o0] = g.obj(iv.IxI.obj(iv.o0, iv.o0));
    obj[iv.o1] = g.obj(iv.IxI.obj(iv.o1, iv.o0));
    return functor_into_indiscrete(iv.I, iv.I, obj);
  };
  auto slot1b = [&](const FunctorMap& g) {  // g∘(I x i1)
    std::vector<int> obj(2);
    obj[iv.o0] = g.obj(iv.IxI.obj(iv.o0, iv.o1));
    obj[iv.o1] = g.obj(iv.IxI.obj(iv.o1, iv.o1));
    return functor_into_indiscrete(iv.I, iv.I, obj);
  };
  FunctorMap i0p = compose(iv.i0, iv.p), i1p = compose(iv.i1, iv.p);
  eq("gul.first0", slot0(iv.gul), idI);
  eq("gul.second0", slot0b(iv.gul), idI);
  eq("gul.first1", slot1(iv.gul), i1p);
  eq("gul.second1", slot1b(iv.gul), i1p);
  eq("glr.first1", slot1(iv.glr), idI);
  eq("glr.second1", slot1b(iv.glr), idI);
  eq("glr.first0", slot0(iv.glr), i0p);
  eq("glr.second0", slot0b(iv.glr), i0p);
  eq("glr.p_compat", compose(iv.p, iv.glr), compose(iv.p, iv.IxI.proj1));
  eq("gur.second0", slot0b(iv.gur), idI);
  eq("gur.first1", slot1(iv.gur), iv.v);
  eq("gur.first0", slot0(iv.gur), i0p);
  eq("gur.second1", slot1b(iv.gur), i0p);
  eq("gur.derived_from_glr", iv.gur,
     compose(iv.glr, product_map(iv.IxI, iv.IxI, identity_functor(iv.I), iv.v)));

  // Compatibility of the right connections with subdivision.
  eq("rc_subdiv.x_r0", compose(iv.x, product_map(iv.IxI, iv.IxS, identity_functor(iv.I), iv.r0)),
     iv.gur);
  eq("rc_subdiv.x_r1", compose(iv.x, product_map(iv.IxI, iv.IxS, identity_functor(iv.I), iv.r1)),
     iv.glr);
  eq("rc_subdiv.compat", compose(iv.x, product_map(iv.IxI, iv.IxS, identity_functor(iv.I), iv.s)),
     iv.IxI.proj1);

  // Strictness.
  eq("strictness.ql_r0", compose(iv.ql, iv.r0), i0p);
  eq("strictness.ql_r1", compose(iv.ql, iv.r1), idI);
  eq("strictness.left_identities", compose(iv.ql, iv.s), idI);
  eq("strictness.qr_r0", compose(iv.qr, iv.r0), idI);
  eq("strictness.qr_r1", compose(iv.qr, iv.r1), i1p);
  eq("strictness.right_identities", compose(iv.qr, iv.s), idI);
  eq("strictness.w_r0", compose(iv.w, iv.r0), iv.v);
  eq("strictness.w_r1", compose(iv.w, iv.r1), idI);
  eq("strictness.left_inverses", compose(iv.w, iv.s), compose(iv.i1, iv.p));

  // Cylindrical adjunction sanity on the interval itself: round trips and
  // contraction compatibility for all functors I x I -> I.
  {
    bool ok = true;
    std::string w;
    CatPtr cI = kit.cyl(kit.I());
    for (const auto& h : kit.functors(cI, kit.I())) {
      FunctorMap back = kit.adj_inv(kit.adj(h));
      if (back != h) {
        ok = false;
        w = "adj round trip fails on " + h.name;
        break;
      }
    }
    rep.add("adjunction.round_trip", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& f : kit.functors(kit.I(), kit.I())) {
      FunctorMap lhs = kit.adj(compose(f, kit.p(kit.I())));
      FunctorMap rhs = compose(kit.c(kit.I()), f);
      if (lhs != rhs) {
        ok = false;
        w = "contraction compatibility fails on " + f.name;
        break;
      }
    }
    rep.add("adjunction.contraction_compat", ok, w);
  }
  return rep;
}

}  // namespace folk
