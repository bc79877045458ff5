#include <benchmark/benchmark.h>

#include "sphtopo/grid.hpp"
#include "sphtopo/harmonics.hpp"

namespace {

using namespace sphtopo;

void BM_Synthesize(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(ell, ++seed));
}
BENCHMARK(BM_Synthesize)->Arg(10)->Arg(40)->Arg(200);

void BM_PointValue(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto f = synthesize(ell, 1);
  const auto p = SpherePoint::make(1.1, 2.3);
  for (auto _ : state) benchmark::DoNotOptimize(f.value(p));
}
BENCHMARK(BM_PointValue)->Arg(10)->Arg(40)->Arg(200);

void BM_PointJet(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto f = synthesize(ell, 1);
  const auto p = SpherePoint::make(1.1, 2.3);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_jet(f, p));
}
BENCHMARK(BM_PointJet)->Arg(10)->Arg(40)->Arg(200);

void BM_Grid512x1024(benchmark::State& state) {
  const auto f = synthesize(40, 1);
  const auto grid = LatLonGrid::regular(512, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid(f, grid));
  state.SetItemsProcessed(state.iterations() * 512 * 1024);
}
BENCHMARK(BM_Grid512x1024)->Unit(benchmark::kMillisecond);

void BM_GridJets(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  const auto f = synthesize(ell, 1);
  const auto grid = LatLonGrid::regular(4 * ell, 8 * ell);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_grid_jets(f, grid));
}
BENCHMARK(BM_GridJets)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
