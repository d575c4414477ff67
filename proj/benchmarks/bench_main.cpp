#include <benchmark/benchmark.h>

#include "logmut/decider.hpp"
#include "logmut/mutation.hpp"
#include "logmut/wallfn.hpp"

using namespace logmut;

static void BM_Canonicalize(benchmark::State& state) {
  const LogDatum s = LogDatum::validate({{{2, 1}, {1}}, {{-3, 2}, {1}}, {{-2, 0}, {2}}, {{3, -3}, {1, 2}}});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(s));
}
BENCHMARK(BM_Canonicalize);

static void BM_Mutate(benchmark::State& state) {
  const LogDatum s = named(NamedDatum::Jerry);
  for (auto _ : state) benchmark::DoNotOptimize(mutate(s, {2, 1}));
}
BENCHMARK(BM_Mutate);

static void BM_DecideAn(benchmark::State& state) {
  const LogDatum s = named(AnDatum{state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(is_zero_mutable(s));
}
BENCHMARK(BM_DecideAn)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Resultant(benchmark::State& state) {
  const BiPoly f = parse_bipoly("u^3 + 2*u^2*x - u*x^2 + 5*x^3 + x");
  const BiPoly g = parse_bipoly("u^2 + 7/2*x*u - x^2");
  for (auto _ : state) benchmark::DoNotOptimize(resultant_u(f, g));
}
BENCHMARK(BM_Resultant);

static void BM_Smoothness(benchmark::State& state) {
  const BiPoly f = parse_bipoly("u^4 - 4*u^2 + 4 + x^2");
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_curve(f));
}
BENCHMARK(BM_Smoothness);

BENCHMARK_MAIN();
