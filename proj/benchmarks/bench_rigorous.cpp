#include <benchmark/benchmark.h>

#include <vector>

#include "sdalab/rigorous/real.hpp"

using namespace sdalab::rigorous;

static void BM_RefineCubeRoot(benchmark::State& state) {
  const std::vector<mpz_class> p{-2, 0, 0, 1};
  const auto x = RigorousReal::algebraic(p, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(refine(x, state.range(0)).precision());
}
BENCHMARK(BM_RefineCubeRoot)->RangeMultiplier(4)->Range(64, 4096);

static void BM_CompareClose(benchmark::State& state) {
  // sqrt2 against a rational agreeing to about `bits` bits.
  const std::vector<mpz_class> p{-2, 0, 1};
  const auto s = RigorousReal::algebraic(p, 1, 2);
  const auto q = RigorousReal::rational(refine(s, state.range(0)).enclosure().mid);
  for (auto _ : state) benchmark::DoNotOptimize(compare(s, q));
}
BENCHMARK(BM_CompareClose)->RangeMultiplier(4)->Range(64, 1024);

BENCHMARK_MAIN();
