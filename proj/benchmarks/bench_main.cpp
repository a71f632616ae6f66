#include <benchmark/benchmark.h>

#include "mcsg/approx3.hpp"
#include "mcsg/collinear.hpp"
#include "mcsg/core.hpp"
#include "mcsg/exact2.hpp"
#include "mcsg/mst.hpp"
#include "mcsg/oracle.hpp"

using namespace mcsg;

static void BM_Mst(benchmark::State& state) {
  Instance inst = generate_random(static_cast<int>(state.range(0)), 1, 0.0, 1);
  std::vector<int> all(inst.n());
  for (int i = 0; i < inst.n(); ++i) all[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(euclidean_mst(inst, all));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mst)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

static void BM_Exact2(benchmark::State& state) {
  Instance inst = generate_random(40, 2, 0.0, 3);
  for (int i = 0; i < state.range(0); ++i) inst.points[i].colors = ColorSet::of({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact2(inst));
}
BENCHMARK(BM_Exact2)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

static void BM_A2(benchmark::State& state) {
  Instance inst = generate_random(static_cast<int>(state.range(0)), 3, 0.0, 5);
  for (int i = 0; i < 6; ++i) inst.points[i].colors = ColorSet::all(3);
  for (auto _ : state) benchmark::DoNotOptimize(approx_a2(inst));
}
BENCHMARK(BM_A2)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_CollinearDp(benchmark::State& state) {
  Instance inst = generate_collinear(static_cast<int>(state.range(0)), 3, 0.3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(dp_solve(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CollinearDp)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity(benchmark::oN)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  Instance inst = generate_random(static_cast<int>(state.range(0)), 2, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(inst));
}
BENCHMARK(BM_Oracle)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
