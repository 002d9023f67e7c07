#include <doctest.h>

#include <iostream>

#include "folk/corpus.hpp"
#include "folk/fibcof.hpp"

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

TEST_CASE("iso-fibration decisions on the named examples") {
  Kit& k = kit();
  CHECK(is_isofibration(k.iv().p).holds);
  IsoFibrationResult r = is_isofibration(k.iv().i0);
  CHECK_FALSE(r.holds);
  CHECK(r.witness_iso == k.I()->arrow_index("f"));
  for (CatPtr g : {k.I(), k.S(), corp().base[6]}) CHECK(is_isofibration(k.bang(g)).holds);
}

TEST_CASE("canonical cleavage fills squares and satisfies the identity rule") {
  Kit& k = kit();
  FunctorMap idI = identity_functor(k.I());
  Cleavage cl = canonical_cleavage(idI);
  for (const auto& h : homotopies_between(k, k.one(), k.I(), 8)) {
    Homotopy l = cl.lift(k, h.f0, h);
    CHECK(l.carrier == h.carrier);
  }
  Cleavage clp = canonical_cleavage(k.iv().p);
  Homotopy idh = identity_homotopy(k, compose(k.iv().p, k.iv().i0));
  Homotopy lifted = clp.lift(k, k.iv().i0, idh);
  CHECK(lifted.carrier == identity_homotopy(k, k.iv().i0).carrier);
  Homotopy l1 = clp.lift(k, k.iv().i1, identity_homotopy(k, compose(k.iv().p, k.iv().i1)));
  Homotopy l2 = clp.lift(k, k.iv().i1, identity_homotopy(k, compose(k.iv().p, k.iv().i1)));
  CHECK(l1 == l2);
}

TEST_CASE("cleavage invariant suite on a corpus fibration") {
  Kit& k = kit();
  Cleavage cl = canonical_cleavage(k.iv().p);
  Report rep = cleavage_invariants(k, cl, corp().functors, 32);
  if (!rep.all_pass()) rep.print(std::cerr);
  CHECK(rep.all_pass());
}

TEST_CASE("broken cleavage violates the identity rule") {
  Kit& k = kit();
  Cleavage cl = broken_cleavage(k.iv().p);
  Report rep = cleavage_invariants(k, cl, corp().functors, 32);
  bool identity_failed = false;
  for (const auto& l : rep.lines)
    if (l.name == "cleavage.lifting_of_identities" && !l.pass) identity_failed = true;
  CHECK(identity_failed);
}

TEST_CASE("cofibration decision with witness") {
  Kit& k = kit();
  auto w = is_cofibration(k, k.iv().i0);
  REQUIRE(w.has_value());
  CHECK(compose(w->r, k.cylF(k.iv().i0)) == w->mc.d0);
  CHECK(compose(w->r, k.i0(k.I())) == w->mc.d1);
  FunctorMap m = canonical_m(k, w->mc);
  CHECK(compose(w->r, m) == identity_functor(w->mc.M));
  CHECK_FALSE(is_cofibration(k, k.iv().p).has_value());
  CHECK(is_cofibration(k, identity_functor(k.I())).has_value());
}

TEST_CASE("cofibration decision agrees with the injectivity oracle on the corpus") {
  Kit& k = kit();
  int disagreements = 0;
  for (const auto& f : corp().functors)
    if (is_cofibration(k, f).has_value() != injective_on_objects_oracle(f)) ++disagreements;
  CHECK(disagreements == 0);
}

TEST_CASE("cylinder-side and co-cylinder-side fibration verdicts agree on the corpus") {
  Kit& k = kit();
  int disagreements = 0;
  for (const auto& f : corp().functors)
    if (is_isofibration(f).holds != cocylinder_fibration_verdict(k, f)) ++disagreements;
  CHECK(disagreements == 0);
}

TEST_CASE("cofibration fillers from the witness") {
  Kit& k = kit();
  auto w = is_cofibration(k, k.iv().i0);
  REQUIRE(w.has_value());
  for (const auto& h : homotopies_between(k, k.one(), k.I(), 8)) {
    for (const auto& g : k.functors(k.I(), k.I())) {
      if (compose(g, k.iv().i0) != h.f0) continue;
      Homotopy filler = cofibration_fill(k, *w, g, h);
      CHECK(compose(filler.carrier, k.cylF(k.iv().i0)) == h.carrier);
      CHECK(filler.f0 == g);
    }
  }
}

TEST_CASE("mapping cylinder factorization produces the SDR homotopy") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  for (const auto& f : {identity_functor(k.one()), k.iv().i0, k.bang(two), k.iv().p}) {
    McFactorization fac = mapping_cylinder_factorization(k, f);
    CHECK(compose(fac.g, fac.j) == f);
    CHECK(compose(fac.g, fac.mc.d1) == identity_functor(f.cod));
    CHECK(is_over(k, fac.h, f.cod, fac.g, fac.g));
    CHECK(fac.h.f0 == compose(fac.mc.d1, fac.g));
    CHECK(fac.h.f1 == identity_functor(fac.mc.M));
  }
  McFactorization fac = mapping_cylinder_factorization(k, identity_functor(k.one()));
  CHECK(fac.mc.M->num_arrows() == 4);
  CHECK(injective_on_objects_oracle(fac.j));
  CHECK(equivalence_oracle(fac.g));
}

TEST_CASE("criterion lift exists for factorization legs") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  for (const auto& f : {identity_functor(k.one()), k.iv().i0, k.bang(two)}) {
    McFactorization fac = mapping_cylinder_factorization(k, f);
    McFactorization fj = mapping_cylinder_factorization(k, fac.j);
    FunctorMap l = criterion_lift_for_factorization(k, fac, fj);
    CHECK(compose(l, fac.j) == fj.j);
    CHECK(compose(fj.g, l) == identity_functor(fac.j.cod));
  }
}

TEST_CASE("normally cloven cofibration decision and cleavage") {
  Kit& k = kit();
  auto nc = normally_cloven_cofibration(k, k.iv().i0);
  REQUIRE(nc.has_value());
  for (const auto& h : homotopies_between(k, k.one(), k.I(), 8)) {
    for (const auto& g : k.functors(k.I(), k.I())) {
      if (compose(g, k.iv().i0) != h.f0) continue;
      Homotopy filler = nc->lift(k, g, h);
      CHECK(compose(filler.carrier, k.cylF(k.iv().i0)) == h.carrier);
      CHECK(filler.f0 == g);
      Homotopy idh = identity_homotopy(k, compose(g, k.iv().i0));
      Homotopy idfill = nc->lift(k, g, idh);
      CHECK(idfill.carrier == identity_homotopy(k, g).carrier);
    }
  }
  CHECK(normally_cloven_cofibration(k, identity_functor(k.I())).has_value());
  CHECK_FALSE(normally_cloven_cofibration(k, k.iv().p).has_value());
}

TEST_CASE("every corpus cofibration is normally cloven (recorded outcome)") {
  Kit& k = kit();
  int cof = 0, nccof = 0;
  for (const auto& f : corp().functors) {
    bool c = is_cofibration(k, f).has_value();
    bool n = normally_cloven_cofibration(k, f).has_value();
    if (c) ++cof;
    if (n) ++nccof;
    CHECK(c == n);
  }
  CHECK(cof == nccof);
  CHECK(cof > 0);
}

TEST_CASE("every corpus iso-fibration is normally cloven under the canonical cleavage") {
  Kit& k = kit();
  for (const auto& f : corp().functors)
    CHECK(is_isofibration(f).holds == is_normally_cloven_fibration(k, f));
}

TEST_CASE("closure checks pass on the corpus") {
  Kit& k = kit();
  std::vector<FunctorMap> slim;
  for (const auto& f : corp().functors)
    if (f.dom->num_arrows() <= 4 && f.cod->num_arrows() <= 4) slim.push_back(f);
  Report rep = closure_checks(k, slim, corp().retracts);
  if (!rep.all_pass()) rep.print(std::cerr);
  CHECK(rep.all_pass());
}

TEST_CASE("canonical cleavage picks the least lifting isomorphism") {
  Kit& k = kit();
  // Projection from the square groupoid to the interval: at (0,0), the
  // generator has two lifts; the chooser returns the least arrow index.
  const Product& pc = k.cyl_product(k.I());
  FunctorMap pr = pc.proj2;  // I x I -> I, second factor
  REQUIRE(is_isofibration(pr).holds);
  Cleavage cl = canonical_cleavage(pr);
  int gen = k.I()->arrow_index("f");
  int obj00 = pc.obj(k.iv().o0, k.iv().o0);
  int chosen = cl.rule(obj00, gen);
  for (int psi = 0; psi < pc.cat->num_arrows(); ++psi) {
    if (!pc.cat->is_iso(psi) || pc.cat->src(psi) != obj00 || pr.arr(psi) != gen) continue;
    CHECK(chosen <= psi);
  }
  CHECK(pr.arr(chosen) == gen);
  // identity inputs always lift to identities.
  CHECK(cl.rule(obj00, k.I()->identity(k.iv().o0)) == pc.cat->identity(obj00));
}
