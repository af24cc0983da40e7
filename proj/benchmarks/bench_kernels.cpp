#include <benchmark/benchmark.h>

#include "bwave/kernels.hpp"
#include "bwave/specfun.hpp"

using namespace bwave;

static void BM_BesselJSeq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double z = 7.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_j_seq(n, z));
    z += 1e-9;
  }
}
BENCHMARK(BM_BesselJSeq)->Arg(20)->Arg(40)->Arg(200);

static void BM_Hankel1Seq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::hankel1_seq(n, 9.1));
}
BENCHMARK(BM_Hankel1Seq)->Arg(20)->Arg(40);

static void BM_SphericalHarmonics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::sph_harmonics(n, 0.7, 1.9));
}
BENCHMARK(BM_SphericalHarmonics)->Arg(10)->Arg(30);

static void BM_GreenFunction(benchmark::State& state) {
  const WaveContext ctx(static_cast<int>(state.range(0)), 2.0, 1.0);
  const Point x{0.1, 0.2, 0.3}, y{0.9, -0.4, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(green_biharmonic(ctx, x, y));
}
BENCHMARK(BM_GreenFunction)->Arg(2)->Arg(3);

static void BM_HelmholtzSeries(benchmark::State& state) {
  const WaveContext ctx(static_cast<int>(state.range(0)), 2.0, 1.0);
  const Point x{2.0, 1.0, 0.5}, y{0.3, -0.2, 0.1};
  for (auto _ : state) benchmark::DoNotOptimize(phi_h_series(ctx, x, y, 40));
}
BENCHMARK(BM_HelmholtzSeries)->Arg(2)->Arg(3);
