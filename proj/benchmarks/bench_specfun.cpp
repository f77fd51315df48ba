#include <benchmark/benchmark.h>

#include "chm/specfun.hpp"

using namespace chm::specfun;

static void BM_ln_gamma(benchmark::State& state) {
  double x = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ln_gamma(x).value);
    x += 1e-9;
  }
}
BENCHMARK(BM_ln_gamma);

static void BM_digamma(benchmark::State& state) {
  double x = 0.97;
  for (auto _ : state) {
    benchmark::DoNotOptimize(digamma(x).value);
    x += 1e-9;
  }
}
BENCHMARK(BM_digamma);

static void BM_polygamma(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = 1.47;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygamma(n, x).value);
    x += 1e-9;
  }
}
BENCHMARK(BM_polygamma)->Arg(1)->Arg(4)->Arg(8);

static void BM_gamma_ratio(benchmark::State& state) {
  double s = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_ratio(1 - s, 1 + s).value);
    s += 1e-10;
  }
}
BENCHMARK(BM_gamma_ratio);
