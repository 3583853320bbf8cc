#include <benchmark/benchmark.h>

#include "cavity_decay/green_sphere.hpp"
#include "cavity_decay/mie.hpp"
#include "cavity_decay/specfun.hpp"
#include "cavity_decay/sweep.hpp"

using namespace cavity_decay;
using namespace cavity_decay::specfun;

static void BM_BesselTables(benchmark::State& state) {
  const Complex z{1.3, 0.4};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sph_bessel_j_table(n, z));
    benchmark::DoNotOptimize(sph_hankel1_table(n, z));
  }
}
BENCHMARK(BM_BesselTables)->Arg(2)->Arg(20)->Arg(60);

static void BM_C1nExact(benchmark::State& state) {
  const auto g = CavityGeometry::fraction_of_wavelength(0.02);
  for (auto _ : state) benchmark::DoNotOptimize(c1n_exact(1.0, {1.0, 4.232}, g));
}
BENCHMARK(BM_C1nExact);

static void BM_ScatteringGreen(benchmark::State& state) {
  const auto g = CavityGeometry::absolute(0.5);
  const Vec3 a{0.05, -0.1, 0.08}, b{-0.03, 0.1, 0.12};
  for (auto _ : state) benchmark::DoNotOptimize(scattering_green(a, b, 1.0, {2.0, 0.5}, g));
}
BENCHMARK(BM_ScatteringGreen);

static void BM_PresetSweep(benchmark::State& state) {
  const auto spec = preset_spec("fig1");
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_PresetSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
