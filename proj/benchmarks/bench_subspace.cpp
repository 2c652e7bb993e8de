#include <benchmark/benchmark.h>

#include <random>

#include "sdalab/subspace.hpp"

using namespace sdalab;
using namespace sdalab::subspaces;

namespace {

std::vector<IntVector> random_vectors(std::size_t count, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-50, 50);
  std::vector<IntVector> out(count, IntVector(dim));
  for (auto& v : out)
    for (auto& c : v) c = d(rng);
  return out;
}

}  // namespace

static void BM_Saturate(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto vs = random_vectors(dim - 1, dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(vs, dim).squared_height());
}
BENCHMARK(BM_Saturate)->DenseRange(3, 8);

static void BM_SumIntersect(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto a = saturate(random_vectors(dim / 2 + 1, dim, rng), dim);
  const auto b = saturate(random_vectors(dim / 2 + 1, dim, rng), dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum(a, b).dim());
    benchmark::DoNotOptimize(intersect(a, b).dim());
  }
}
BENCHMARK(BM_SumIntersect)->DenseRange(3, 8);

static void BM_SchmidtFuzz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(schmidt_fuzz(5, state.range(0), 1).max_ratio_sq);
}
BENCHMARK(BM_SchmidtFuzz)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
