#include <benchmark/benchmark.h>

#include "chm/periods.hpp"
#include "chm/surface.hpp"

using namespace chm;

static void BM_period_quadrature(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const surface::DifferentialForm form{surface::FormFamily::kBasis2, 2, g};
  for (auto _ : state) {
    benchmark::DoNotOptimize(periods::period(form, 1, 0, g));
  }
}
BENCHMARK(BM_period_quadrature)->Arg(2)->Arg(5)->Unit(benchmark::kMicrosecond);

static void BM_residue(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const surface::DifferentialForm form{surface::FormFamily::kBasis2, 0, g};
  const surface::SurfacePoint q0{0.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(surface::residue_at(form, q0).value);
  }
}
BENCHMARK(BM_residue)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_assemble_system(benchmark::State& state) {
  const GenusParams p = GenusParams::from_genus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(periods::assemble_system(p, 1.01).dim_solution);
  }
}
BENCHMARK(BM_assemble_system)->Arg(2)->Arg(10)->Arg(38)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
