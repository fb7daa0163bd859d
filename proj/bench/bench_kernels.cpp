#include <benchmark/benchmark.h>

#include "hcurve/cesaro.hpp"
#include "hcurve/frenet.hpp"
#include "hcurve/kernels.hpp"

using namespace hcurve;

namespace {

const HorizontalCurve& curve() {
  static const HorizontalCurve h =
      reconstruct({ScalarFn::parse("1+0.3*sin(s)"), ScalarFn::parse("0.2*cos(s)")}, {{0.5, -0.2, 0.1}, 0.7}, 8);
  return h;
}

const PansuSphere& sphere() {
  static const PansuSphere p = pansu_sphere(1.0);
  return p;
}

template <auto Kernel>
void invariants(benchmark::State& state) {
  const auto grid = arc_grid(curve(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(curve(), grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void cesaro(benchmark::State& state) {
  const auto grid = arc_grid(curve(), static_cast<std::size_t>(state.range(0)), 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(curve(), grid, 1e-5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void membership(benchmark::State& state) {
  const auto table = generator_table(sphere().surface, 2000);
  const auto grid = arc_grid(sphere().curve, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(sphere().curve, sphere().surface, table, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(invariants<kernels::sample_invariants>)->Name("invariants/parallel")->Arg(1000)->Arg(10000);
BENCHMARK(invariants<kernels::reference::sample_invariants>)->Name("invariants/serial")->Arg(1000)->Arg(10000);
BENCHMARK(invariants<kernels::sample_frame_coefficients>)->Name("frame_coefficients/parallel")->Arg(1000)->Arg(10000);
BENCHMARK(invariants<kernels::reference::sample_frame_coefficients>)
    ->Name("frame_coefficients/serial")
    ->Arg(1000)
    ->Arg(10000);
BENCHMARK(cesaro<kernels::cesaro_residuals>)->Name("cesaro_residuals/parallel")->Arg(1000)->Arg(10000);
BENCHMARK(cesaro<kernels::reference::cesaro_residuals>)->Name("cesaro_residuals/serial")->Arg(1000)->Arg(10000);
BENCHMARK(membership<kernels::membership_defects>)->Name("membership/parallel")->Arg(1000);
BENCHMARK(membership<kernels::reference::membership_defects>)->Name("membership/serial")->Arg(1000);

BENCHMARK_MAIN();
