#include <benchmark/benchmark.h>

#include "bwave/fields.hpp"
#include "bwave/spectral.hpp"

using namespace bwave;

namespace {

SourceField gaussian(int d) {
  return make_gaussian(WaveContext(d, 2.0, 1.0), {0.2, -0.15, d == 3 ? 0.1 : 0.0}, 0.3);
}

}  // namespace

static void BM_ModalCoefficients(benchmark::State& state) {
  const auto f = gaussian(static_cast<int>(state.range(0)));
  const int N = default_truncation(f.context());
  for (auto _ : state) benchmark::DoNotOptimize(modal_coefficients(f, N));
}
BENCHMARK(BM_ModalCoefficients)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BoundaryTrace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto f = gaussian(d);
  const auto ex = ExteriorExpansion::from_source(f);
  const auto grid = boundary_grid(f.context(), d == 2 ? 128 : 32);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_trace(ex, grid));
}
BENCHMARK(BM_BoundaryTrace)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_NearFieldFunctionals(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto f = gaussian(d);
  const auto ex = ExteriorExpansion::from_source(f);
  const auto trace = boundary_trace(ex, boundary_grid(f.context(), d == 2 ? 128 : 32));
  const auto dirs = direction_grid(d, 64);
  for (auto _ : state) {
    benchmark::DoNotOptimize(u_hat_from_trace(f.context(), trace, dirs));
    benchmark::DoNotOptimize(v_check_from_trace(f.context(), trace, dirs));
  }
}
BENCHMARK(BM_NearFieldFunctionals)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_VerdictBessel2d(benchmark::State& state) {
  const auto ctx = WaveContext::at_bessel_root(2, 1.0, 1);
  const auto f = make_2d_bessel_nonradiating(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(verdict(f));
}
BENCHMARK(BM_VerdictBessel2d)->Unit(benchmark::kMillisecond);

static void BM_VerdictBump3d(benchmark::State& state) {
  const auto f = make_bump_nonradiating(WaveContext(3, 3.0, 1.0));
  for (auto _ : state) benchmark::DoNotOptimize(verdict(f));
}
BENCHMARK(BM_VerdictBump3d)->Unit(benchmark::kMillisecond);
