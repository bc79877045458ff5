#include <benchmark/benchmark.h>

#include "sphtopo/montecarlo.hpp"
#include "sphtopo/topology.hpp"

namespace {

using namespace sphtopo;

void BM_CriticalSearch(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    const auto f = synthesize(ell, ++seed);
    state.ResumeTiming();
    benchmark::DoNotOptimize(find_critical_points(f));
  }
}
BENCHMARK(BM_CriticalSearch)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Triangulation(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_triangulation(ell, 8));
}
BENCHMARK(BM_Triangulation)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_MeshEpc(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto mesh = build_triangulation(ell, 8);
  const auto f = synthesize(ell, 3);
  for (auto _ : state) {
    const auto samples = evaluate_on_triangulation(f, mesh);
    benchmark::DoNotOptimize(epc_mesh(mesh, samples, ThresholdInterval::half_line(1.0)));
  }
}
BENCHMARK(BM_MeshEpc)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Ensemble(benchmark::State& state) {
  mc::EnsembleConfig cfg;
  cfg.ell = 20;
  cfg.n_samples = 16;
  cfg.intervals = {ThresholdInterval::half_line(0.0), ThresholdInterval::half_line(2.0)};
  cfg.parallelism = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_ensemble(cfg));
}
BENCHMARK(BM_Ensemble)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
