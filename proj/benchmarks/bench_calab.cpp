#include <benchmark/benchmark.h>

#include "calab/deciders_finite.hpp"
#include "calab/deciders_onedim.hpp"
#include "calab/gf2lab.hpp"
#include "calab/groups.hpp"

using namespace calab;

// All four one-dimensional verdicts over the 256 width-3 binary rules.
static void BM_ElementarySweep(benchmark::State& state) {
  for (auto _ : state) {
    int count = 0;
    for (std::uint32_t n = 0; n < 256; ++n) {
      const LocalRule rule = LocalRule::elementary(n);
      count += decide_surjective(rule).surjective + decide_injective(rule).injective +
               decide_pre_injective(rule).pre_injective;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ElementarySweep)->Unit(benchmark::kMillisecond);

static void BM_DetGf2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = circulant({n, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(det_gf2(m));
}
BENCHMARK(BM_DetGf2)->RangeMultiplier(4)->Range(16, 1024);

static void BM_DetInt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = circulant_int({n, {1, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(det_int(m));
}
BENCHMARK(BM_DetInt)->DenseRange(4, 64, 20);

static void BM_AnalyzeFinite(benchmark::State& state) {
  const auto m = state.range(0);
  const FiniteGroup group = make_cyclic(m);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_finite(LocalRule::rule150w(), group).bijective);
}
BENCHMARK(BM_AnalyzeFinite)->DenseRange(4, 16, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
