#include <benchmark/benchmark.h>

#include "sdalab/minpoints.hpp"
#include "sdalab/model.hpp"
#include "sdalab/presets.hpp"

using namespace sdalab;

static void BM_Enumerate(benchmark::State& state, const char* preset) {
  const auto t = model::load_target(presets::config(preset));
  for (auto _ : state) {
    auto seq = minpoints::enumerate_minimal_points(t.target, t.set, state.range(0));
    benchmark::DoNotOptimize(seq.entries.data());
  }
}
BENCHMARK_CAPTURE(BM_Enumerate, sqrt2, "sqrt2")->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, cubic, "cubic")->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, sqrt2_sqrt3, "sqrt2-sqrt3")->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond);

static void BM_Exhaustive(benchmark::State& state) {
  const auto t = model::load_target(presets::config("cubic"));
  for (auto _ : state) {
    auto seq = minpoints::exhaustive_minimal_points(t.target, t.set, state.range(0));
    benchmark::DoNotOptimize(seq.entries.data());
  }
}
BENCHMARK(BM_Exhaustive)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
