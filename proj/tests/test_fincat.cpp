#include <doctest.h>

#include <functional>

#include "folk/corpus.hpp"
#include "folk/fincat.hpp"
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

TEST_CASE("terminal category validates") {
  CHECK(validate(*kit().one()).pass());
  CHECK(kit().one()->num_objects() == 1);
  CHECK(kit().one()->num_arrows() == 1);
}

TEST_CASE("interval groupoid validates and has the expected arrows") {
  CatPtr I = kit().I();
  CHECK(validate(*I).pass());
  CHECK(I->num_objects() == 2);
  CHECK(I->num_arrows() == 4);
  CHECK(I->arrow_index("f") >= 0);
  CHECK(I->arrow_index("f_inv") >= 0);
  int f = I->arrow_index("f");
  CHECK(I->inverse(f) == I->arrow_index("f_inv"));
  CHECK(I->is_indiscrete());
}

TEST_CASE("a broken composition table is reported with a witness") {
  // Take the interval and corrupt comp(f_inv, f) to f.
  CatPtr I = kit().I();
  std::vector<int> comp(static_cast<size_t>(I->num_arrows()) * I->num_arrows(), -1);
  for (int g = 0; g < I->num_arrows(); ++g)
    for (int f = 0; f < I->num_arrows(); ++f)
      if (I->composable(g, f))
        comp[static_cast<size_t>(g) * I->num_arrows() + f] = I->compose(g, f);
  int f = I->arrow_index("f"), fi = I->arrow_index("f_inv");
  comp[static_cast<size_t>(fi) * I->num_arrows() + f] = f;
  std::vector<int> ident(I->num_objects());
  for (int x = 0; x < I->num_objects(); ++x) ident[x] = I->identity(x);
  FinCat broken("broken", I->objects(), I->arrows(), ident, comp);
  ValidationReport rep = validate(broken);
  CHECK_FALSE(rep.pass());
}

TEST_CASE("functor composition and identities") {
  Kit& k = kit();
  const IntervalStructure& iv = k.iv();
  FunctorMap idI = identity_functor(k.I());
  CHECK(compose(idI, iv.i0) == iv.i0);
  CHECK(compose(iv.p, iv.i0) == identity_functor(k.one()));
  // i0∘p is the constant endofunctor at 0.
  FunctorMap c0 = compose(iv.i0, iv.p);
  for (int x = 0; x < k.I()->num_objects(); ++x) CHECK(c0.obj(x) == iv.o0);
}

TEST_CASE("products have componentwise structure") {
  Kit& k = kit();
  Product p = product(k.I(), k.I());
  CHECK(validate(*p.cat).pass());
  CHECK(p.cat->num_objects() == 4);
  CHECK(p.cat->num_arrows() == 16);
  CHECK(validate(p.proj1).pass());
  CHECK(validate(p.proj2).pass());
  Product q = product(k.one(), k.I());
  CHECK(q.cat->num_objects() == 2);
  CHECK(q.cat->num_arrows() == 4);
  CHECK(q.cat->is_indiscrete());
  CatPtr two = corp().base[1];
  CHECK(two->name() == "two");
  CHECK(product(two, k.I()).cat->num_arrows() == 12);
}

TEST_CASE("functor enumeration matches hand counts") {
  Kit& k = kit();
  CHECK(k.functors(k.one(), k.I()).size() == 2);
  CHECK(k.functors(k.I(), k.one()).size() == 1);
  CHECK(k.functors(k.I(), k.I()).size() == 4);
  CHECK(k.functors(k.S(), k.S()).size() == 27);
  for (const auto& f : k.functors(k.I(), k.I())) CHECK(validate(f).pass());
}

TEST_CASE("functor enumeration agrees with a blind recount on small categories") {
  // Independent oracle over every pair of base categories with at most
  // 3 objects and 9 arrows: try all endpoint-compatible assignments and
  // count the ones validation accepts, with no composition pruning.
  Kit& k = kit();
  for (CatPtr a : corp().base) {
    if (a->num_objects() > 3 || a->num_arrows() > 9) continue;
    for (CatPtr b : corp().base) {
      if (b->num_objects() > 3 || b->num_arrows() > 9) continue;
      size_t count = 0;
      std::vector<int> obj(a->num_objects()), arr(a->num_arrows());
      std::function<void(int)> rec_arr = [&](int i) {
        if (i == a->num_arrows()) {
          FunctorMap f;
          f.dom = a;
          f.cod = b;
          f.obj_map = obj;
          f.arr_map = arr;
          if (validate(f).pass()) ++count;
          return;
        }
        for (int c = 0; c < b->num_arrows(); ++c) {
          if (b->src(c) != obj[a->src(i)] || b->tgt(c) != obj[a->tgt(i)]) continue;
          arr[i] = c;
          rec_arr(i + 1);
        }
      };
      std::function<void(int)> rec_obj = [&](int x) {
        if (x == a->num_objects()) {
          rec_arr(0);
          return;
        }
        for (int c = 0; c < b->num_objects(); ++c) {
          obj[x] = c;
          rec_obj(x + 1);
        }
      };
      rec_obj(0);
      CHECK(count == k.functors(a, b).size());
    }
  }
}

TEST_CASE("equivalence oracle on the named examples") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  CHECK(equivalence_oracle(k.iv().p));
  // The walking arrow collapsed to the point: essentially surjective but
  // not fully faithful (no preimage over Hom(b, a)).
  FunctorMap u = k.bang(two);
  CHECK_FALSE(equivalence_oracle(u));
  CHECK(essentially_surjective(u));
  CHECK_FALSE(fully_faithful(u));
  CHECK(equivalence_oracle(k.iv().i0));
}

TEST_CASE("injectivity oracle") {
  Kit& k = kit();
  CHECK(injective_on_objects_oracle(k.iv().i0));
  CHECK_FALSE(injective_on_objects_oracle(k.iv().p));
  CHECK(injective_on_objects_oracle(identity_functor(k.one())));
}

TEST_CASE("exponentials match the derived counts") {
  Kit& k = kit();
  CatPtr two = corp().base[1];
  Exponential e1 = exponential_by(k.one(), two);
  CHECK(e1.cat->num_objects() == two->num_objects());
  CHECK(e1.cat->num_arrows() == two->num_arrows());
  const Exponential& e2 = k.cocyl_exponential(two);
  CHECK(e2.cat->num_objects() == 2);
  CHECK(e2.cat->num_arrows() == 3);
  const Exponential& e3 = k.cocyl_exponential(k.I());
  CHECK(e3.cat->num_objects() == 4);
  CHECK(e3.cat->num_arrows() == 16);
  CHECK(e3.cat->is_indiscrete());
  CHECK(validate(*e3.cat).pass());
}

TEST_CASE("pullbacks compute compatible pairs and satisfy the bijection") {
  Kit& k = kit();
  FunctorMap idI = identity_functor(k.I());
  PullbackCat pb = pullback({idI, idI});
  CHECK(pb.cat->num_objects() == k.I()->num_objects());
  CHECK(pb.cat->num_arrows() == k.I()->num_arrows());
  FunctorMap bangI = k.bang(k.I());
  PullbackCat pb2 = pullback({bangI, bangI});
  CHECK(pb2.cat->num_objects() == 4);
  CHECK(pb2.cat->num_arrows() == 16);
  for (CatPtr t : {k.one(), k.I()}) CHECK(pullback_bijection(k, pb2, t));
}

TEST_CASE("hom-set adjunction counts |Funct(a x I, b)| = |Funct(a, b^I)|") {
  Kit& k = kit();
  for (CatPtr a : {corp().base[0], corp().base[1], corp().base[2]}) {
    for (CatPtr b : {corp().base[0], corp().base[1], corp().base[2]}) {
      size_t lhs = k.functors(k.cyl(a), b).size();
      size_t rhs = k.functors(a, k.cocyl(b)).size();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("constrained search respects pins") {
  Kit& k = kit();
  FunctorConstraint con = empty_constraint(*k.I());
  con.obj[k.iv().o0] = k.iv().o1;
  auto found = search_functor(k.I(), k.I(), con);
  REQUIRE(found.has_value());
  CHECK(found->obj(k.iv().o0) == k.iv().o1);
}

TEST_CASE("corpus shape") {
  Corpus& c = corp();
  CHECK(c.base.size() == 7);
  CHECK(c.categories.size() == 7 + 28);
  for (const auto& cat : c.categories) CHECK(validate(*cat).pass());
  CHECK(!c.functors.empty());
  CHECK(!c.retracts.empty());
  for (const auto& r : c.retracts) CHECK(validate_retract(r.retract));
}
