#include <benchmark/benchmark.h>

#include "folk/modelstruct.hpp"

using namespace folk;

static void BM_BuildInterval(benchmark::State& state) {
  for (auto _ : state) {
    IntervalStructure iv = build_interval();
    benchmark::DoNotOptimize(iv.x.arr_map.data());
  }
}
BENCHMARK(BM_BuildInterval);

static void BM_VerifyInterval(benchmark::State& state) {
  Kit kit;
  Corpus corpus = default_corpus(kit);
  for (auto _ : state) {
    Report rep = verify_interval(kit, corpus.test_family);
    benchmark::DoNotOptimize(rep.lines.size());
  }
}
BENCHMARK(BM_VerifyInterval);

static void BM_EnumerateFunctorsSS(benchmark::State& state) {
  Kit kit;
  for (auto _ : state) {
    auto fs = enumerate_functors(kit.S(), kit.S());
    benchmark::DoNotOptimize(fs.size());
  }
}
BENCHMARK(BM_EnumerateFunctorsSS);

static void BM_MappingCylinderFactorization(benchmark::State& state) {
  Kit kit;
  Corpus corpus = default_corpus(kit);
  FunctorMap f = kit.bang(corpus.base[6]);  // z2grp -> 1
  for (auto _ : state) {
    McFactorization fac = mapping_cylinder_factorization(kit, f);
    benchmark::DoNotOptimize(fac.h.carrier.arr_map.data());
  }
}
BENCHMARK(BM_MappingCylinderFactorization);

static void BM_DoldFiberwiseInverse(benchmark::State& state) {
  Kit kit;
  FunctorMap v = kit.iv().v;
  FunctorMap bang = kit.bang(kit.I());
  auto cert = find_equivalence(kit, v);
  for (auto _ : state) {
    OverEquivalence ov = dold_fiberwise_inverse(kit, v, bang, bang, *cert);
    benchmark::DoNotOptimize(ov.g.obj_map.data());
  }
}
BENCHMARK(BM_DoldFiberwiseInverse);

static void BM_HomotopyComposition(benchmark::State& state) {
  Kit kit;
  Corpus corpus = default_corpus(kit);
  std::vector<Homotopy> hs = homotopies_between(kit, kit.S(), kit.S(), 4);
  Homotopy h = hs.back();
  for (auto _ : state) {
    Homotopy c = hcompose(kit, h, reverse(kit, h));
    benchmark::DoNotOptimize(c.carrier.arr_map.data());
  }
}
BENCHMARK(BM_HomotopyComposition);

BENCHMARK_MAIN();
