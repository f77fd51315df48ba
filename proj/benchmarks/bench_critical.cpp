#include <benchmark/benchmark.h>

#include "chm/bounds.hpp"
#include "chm/critical.hpp"

using namespace chm;

static void BM_critical_values(benchmark::State& state) {
  const GenusParams p = GenusParams::from_genus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_values(p).t3);
  }
}
BENCHMARK(BM_critical_values)->Arg(2)->Arg(100)->Arg(5000);

static void BM_quartic_instance(benchmark::State& state) {
  const GenusParams p = GenusParams::from_genus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quartic_instance(2, p).X);
  }
}
BENCHMARK(BM_quartic_instance)->Arg(38)->Arg(1000);

static void BM_scan(benchmark::State& state) {
  const int hi = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(2, hi).size());
  }
}
BENCHMARK(BM_scan)->Arg(37)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_certify_all(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds::certify_all().size());
  }
}
BENCHMARK(BM_certify_all)->Unit(benchmark::kMillisecond);
