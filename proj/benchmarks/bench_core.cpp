#include <benchmark/benchmark.h>

#include "grasscut/coherent.hpp"
#include "grasscut/geodesics.hpp"
#include "grasscut/harness.hpp"
#include "grasscut/pluecker.hpp"

using namespace grasscut;

static void BM_Embed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const Plane X = random_plane(n, N, 1);
  for (auto _ : state) benchmark::DoNotOptimize(embed(X));
}
BENCHMARK(BM_Embed)->Args({2, 4})->Args({2, 6})->Args({3, 7});

static void BM_PrincipalAngles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const Plane X = random_plane(n, N, 1);
  const Plane Y = random_plane(n, N, 2);
  for (auto _ : state) benchmark::DoNotOptimize(principal_angles(X, Y));
}
BENCHMARK(BM_PrincipalAngles)->Args({2, 4})->Args({4, 10});

static void BM_Overlap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Plane X = random_plane(n, 2 * n, 1);
  const Plane Y = random_plane(n, 2 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(overlap(X, Y));
}
BENCHMARK(BM_Overlap)->Arg(2)->Arg(4)->Arg(6);

static void BM_CutVerdict(benchmark::State& state) {
  const Plane O = base_point(2, 5);
  const Plane X = random_plane(2, 5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cut_locus_member(X, O));
}
BENCHMARK(BM_CutVerdict);

static void BM_Campaign(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.campaign = Campaign::PolarVsCutlocus;
  cfg.n = 2;
  cfg.m = 3;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Campaign)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
