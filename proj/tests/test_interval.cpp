#include <doctest.h>

#include <iostream>

#include "folk/corpus.hpp"
#include "folk/interval.hpp"

using namespace folk;

namespace {
Kit& kit() {
  static Kit k;
  return k;
}
Corpus& corp() {
  static Corpus c = default_corpus(kit());
  return c;
}
}  // namespace

TEST_CASE("connection tables match the free-groupoid notation") {
  const IntervalStructure& iv = kit().iv();
  auto at = [&](const FunctorMap& g, int t1, int t2) { return g.obj(iv.IxI.obj(t1, t2)); };
  // upper left: maximum
  CHECK(at(iv.gul, 0, 0) == iv.o0);
  CHECK(at(iv.gul, 1, 0) == iv.o1);
  CHECK(at(iv.gul, 0, 1) == iv.o1);
  CHECK(at(iv.gul, 1, 1) == iv.o1);
  // lower right: minimum
  CHECK(at(iv.glr, 0, 0) == iv.o0);
  CHECK(at(iv.glr, 1, 0) == iv.o0);
  CHECK(at(iv.glr, 0, 1) == iv.o0);
  CHECK(at(iv.glr, 1, 1) == iv.o1);
  // upper right: min(t1, v(t2))
  CHECK(at(iv.gur, 0, 0) == iv.o0);
  CHECK(at(iv.gur, 1, 0) == iv.o1);
  CHECK(at(iv.gur, 0, 1) == iv.o0);
  CHECK(at(iv.gur, 1, 1) == iv.o0);
  // v swaps the generator and its inverse.
  CHECK(iv.v.arr(kit().I()->arrow_index("f")) == kit().I()->arrow_index("f_inv"));
}

TEST_CASE("connection tables on arrows of the free groupoid") {
  Kit& k = kit();
  const IntervalStructure& iv = k.iv();
  const FinCat& I = *k.I();
  int f = I.arrow_index("f"), id0 = I.identity(iv.o0), id1 = I.identity(iv.o1);
  auto glr_arr = [&](int u, int w) { return iv.glr.arr(iv.IxI.arr(u, w)); };
  // The lower right connection maps (f,f) to f and (f,id_0) to id_0,
  // extended to composites by functoriality.
  CHECK(glr_arr(f, f) == f);
  CHECK(glr_arr(f, id0) == id0);
  CHECK(glr_arr(f, id1) == f);
  CHECK(glr_arr(id1, f) == f);
  CHECK(glr_arr(id0, f) == id0);
  auto gul_arr = [&](int u, int w) { return iv.gul.arr(iv.IxI.arr(u, w)); };
  CHECK(gul_arr(f, f) == f);
  CHECK(gul_arr(f, id1) == id1);
  CHECK(gul_arr(f, id0) == f);
  // v on arrows: the generator goes to its inverse.
  CHECK(iv.v.arr(f) == I.inverse(f));
}

TEST_CASE("the z2 groupoid has two automorphisms per object") {
  CatPtr z2 = corp().base[6];
  CHECK(z2->name() == "z2grp");
  CHECK(z2->num_objects() == 2);
  for (int x = 0; x < z2->num_objects(); ++x) {
    auto endos = z2->hom(x, x);
    CHECK(endos.size() == 2);
    for (int a : endos) {
      CHECK(z2->is_iso(a));
      CHECK(z2->compose(a, a) == z2->identity(x));
    }
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(z2->hom(x, y).size() == 2);
}

TEST_CASE("interval verify passes every axiom on the built structure") {
  Report rep = verify_interval(kit(), corp().test_family);
  if (!rep.all_pass()) rep.print(std::cerr);
  CHECK(rep.all_pass());
}

TEST_CASE("a sabotaged involution fails exactly the involution axioms") {
  Kit& k = kit();
  IntervalStructure iv = k.iv();
  iv.v = identity_functor(iv.I);
  Report rep = verify_interval_structure(k, iv, {k.one(), k.I()});
  CHECK_FALSE(rep.all_pass());
  bool inv_failed = false;
  for (const auto& l : rep.lines) {
    if (l.name == "involution.i0" || l.name == "involution.i1") inv_failed |= !l.pass;
    if (l.name.rfind("contraction", 0) == 0) CHECK(l.pass);
    if (l.name.rfind("subdivision.s", 0) == 0) CHECK(l.pass);
  }
  CHECK(inv_failed);
}

TEST_CASE("a hand-rolled upper right connection from the derived formula passes") {
  Kit& k = kit();
  IntervalStructure iv = k.iv();
  iv.gur = compose(iv.glr, product_map(iv.IxI, iv.IxI, identity_functor(iv.I), iv.v));
  Report rep = verify_interval_structure(k, iv, {k.one(), k.I()});
  CHECK(rep.all_pass());
}

TEST_CASE("derived upper right connection equals the explicit one") {
  const IntervalStructure& iv = kit().iv();
  FunctorMap flip_outer = product_map(iv.IxI, iv.IxI, identity_functor(iv.I), iv.v);
  CHECK(compose(iv.glr, flip_outer) == iv.gur);
}

TEST_CASE("cylinder and co-cylinder applications") {
  Kit& k = kit();
  CHECK(k.cyl(k.one())->num_arrows() == 4);
  CHECK(k.cyl(k.I())->num_arrows() == 16);
  CHECK(compose(k.p(k.I()), k.i0(k.I())) == identity_functor(k.I()));
  CHECK(compose(k.p(k.I()), k.i1(k.I())) == identity_functor(k.I()));
  // e0/e1 retract c.
  for (CatPtr a : {k.one(), k.I(), corp().base[1]}) {
    CHECK(compose(k.e0(a), k.c(a)) == identity_functor(a));
    CHECK(compose(k.e1(a), k.c(a)) == identity_functor(a));
  }
}

TEST_CASE("adjunction round trip and boundary compatibility") {
  Kit& k = kit();
  CatPtr a = k.I();
  CatPtr b = k.I();
  for (const auto& h : k.functors(k.cyl(a), b)) {
    FunctorMap t = k.adj(h);
    CHECK(k.adj_inv(t) == h);
    // boundary triangles: e0∘adj(h) = h∘i0 and e1∘adj(h) = h∘i1.
    CHECK(compose(k.e0(b), t) == compose(h, k.i0(a)));
    CHECK(compose(k.e1(b), t) == compose(h, k.i1(a)));
  }
  for (const auto& kf : k.functors(a, k.cocyl(b))) {
    CHECK(k.adj(k.adj_inv(kf)) == kf);
  }
}

TEST_CASE("adjunction naturality in both slots") {
  Kit& k = kit();
  CatPtr a = k.I(), b = k.I();
  const auto& hs = k.functors(k.cyl(a), b);
  const auto& pre = k.functors(a, a);
  for (size_t i = 0; i < hs.size() && i < 4; ++i) {
    for (size_t j = 0; j < pre.size() && j < 4; ++j) {
      // adj(h∘cyl(u)) = adj(h)∘u
      CHECK(k.adj(compose(hs[i], k.cylF(pre[j]))) == compose(k.adj(hs[i]), pre[j]));
      // adj(w∘h) = cocyl(w)∘adj(h)
      CHECK(k.adj(compose(pre[j], hs[i])) == compose(k.cocylF(pre[j]), k.adj(hs[i])));
    }
  }
}

TEST_CASE("mapping cylinder of the identity on 1 is the interval") {
  Kit& k = kit();
  MappingCylinder mc = mapping_cylinder(k, identity_functor(k.one()));
  CHECK(mc.M->num_objects() == 2);
  CHECK(mc.M->num_arrows() == 4);
  CHECK(mc.M->is_indiscrete());
  CHECK(validate(*mc.M).pass());
  CHECK(validate(mc.d0).pass());
  CHECK(validate(mc.d1).pass());
  // defining square: d0∘i0 = d1∘f.
  CHECK(compose(mc.d0, k.i0(k.one())) == compose(mc.d1, mc.f));
}

TEST_CASE("mapping cylinder of two -> 1 is the subdivision shape") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  MappingCylinder mc = mapping_cylinder(k, k.bang(two));
  CHECK(mc.M->num_objects() == 3);
  CHECK(mc.M->num_arrows() == 9);
  CHECK(mc.M->is_indiscrete());
  for (CatPtr t : corp().test_family)
    if (t->num_arrows() <= 9) CHECK(mapping_cylinder_bijection(k, mc, t));
}

TEST_CASE("mapping cylinder of i0 : 1 -> I has singleton homs") {
  Kit& k = kit();
  MappingCylinder mc = mapping_cylinder(k, k.iv().i0);
  CHECK(mc.M->num_objects() == 3);
  CHECK(mc.M->is_indiscrete());
  for (CatPtr t : {k.one(), k.I(), corp().base[1]}) CHECK(mapping_cylinder_bijection(k, mc, t));
}

TEST_CASE("canonical m and its object-surjectivity scan") {
  Kit& k = kit();
  // m is surjective on objects exactly when f is; scan small corpus maps.
  CatPtr two = corp().base[1];
  std::vector<FunctorMap> probes{identity_functor(k.one()), k.iv().i0, k.bang(two),
                                 identity_functor(k.I())};
  for (const auto& f : probes) {
    MappingCylinder mc = mapping_cylinder(k, f);
    FunctorMap m = canonical_m(k, mc);
    CHECK(compose(m, mc.d0) == k.cylF(f));
    CHECK(compose(m, mc.d1) == k.i0(f.cod));
    CHECK(surjective_on_objects(m) == surjective_on_objects(f));
  }
  // f = id on 1: m is the identity up to the canonical naming.
  MappingCylinder mc1 = mapping_cylinder(k, identity_functor(k.one()));
  FunctorMap m1 = canonical_m(k, mc1);
  CHECK(equivalence_oracle(m1));
  CHECK(injective_on_objects_oracle(m1));
  CHECK(surjective_on_objects(m1));
}

TEST_CASE("cyl preserves mapping cylinders on small instances") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  for (const auto& f : {k.iv().i0, identity_functor(k.one()), k.bang(two)}) {
    MappingCylinder mc = mapping_cylinder(k, f);
    for (CatPtr t : {k.one(), k.I()}) CHECK(cyl_mapping_cylinder_bijection(k, mc, t));
  }
}

TEST_CASE("mapping co-cylinder examples") {
  Kit& k = kit();
  // id on 1: the mapping co-cylinder is the point.
  MappingCoCylinder m1 = mapping_cocylinder(k, identity_functor(k.one()));
  CHECK(m1.pb.cat->num_objects() == 1);
  // p : I -> 1: objects are pairs (object of I, iso of 1).
  MappingCoCylinder m2 = mapping_cocylinder(k, k.iv().p);
  CHECK(m2.pb.cat->num_objects() == 2);
  CHECK(m2.pb.cat->is_indiscrete());
  // i0 : 1 -> I: objects are the isos of I with source 0.
  MappingCoCylinder m3 = mapping_cocylinder(k, k.iv().i0);
  CHECK(m3.pb.cat->num_objects() == 2);
  for (CatPtr t : {k.one(), k.I()}) CHECK(pullback_bijection(k, m3.pb, t));
  // the co-cylinder-side canonical arrow lands where it should
  FunctorMap m = cocyl_m(k, m3);
  CHECK(compose(m3.d0, m) == k.e0(k.one()));
  CHECK(compose(m3.d1, m) == k.cocylF(k.iv().i0));
}

TEST_CASE("pullback of e0 cospan for the identity recovers the co-cylinder") {
  Kit& k = kit();
  MappingCoCylinder mcc = mapping_cocylinder(k, identity_functor(k.I()));
  CHECK(mcc.pb.cat->num_objects() == k.cocyl(k.I())->num_objects());
  CHECK(mcc.pb.cat->num_arrows() == k.cocyl(k.I())->num_arrows());
}
