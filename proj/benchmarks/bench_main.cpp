#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "dwellroute/dwell_opt.hpp"
#include "dwellroute/infogain.hpp"
#include "dwellroute/instance.hpp"
#include "dwellroute/multi_vehicle.hpp"
#include "dwellroute/single_vehicle.hpp"
#include "dwellroute/tsp.hpp"

using namespace dwellroute;

namespace {

std::vector<VertexId> all_targets(const Instance& inst) {
  std::vector<VertexId> t(inst.num_targets());
  std::iota(t.begin(), t.end(), 0);
  return t;
}

InfoParams per_tsp(const Instance& inst, double tau) {
  InfoParams p;
  p.alpha = 1.0 / single_vehicle_tsp_cost(inst);
  p.tau.assign(inst.num_targets(), tau);
  return p;
}

void BM_MutualInfo(benchmark::State& state) {
  double d = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mutual_info(d, 1.0));
    benchmark::DoNotOptimize(mutual_info_deriv(d, 1.0));
    d = d < 100.0 ? d * 1.01 : 0.1;
  }
}
BENCHMARK(BM_MutualInfo);

void BM_OptimizeDwell(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> taus(n);
  for (std::size_t i = 0; i < n; ++i) taus[i] = 0.5 + static_cast<double>(i % 7) * 0.25;
  for (auto _ : state) benchmark::DoNotOptimize(optimize_dwell(0.0, taus, 1e-4).objective);
}
BENCHMARK(BM_OptimizeDwell)->Arg(10)->Arg(99)->Arg(500);

void BM_HeldKarp(benchmark::State& state) {
  const auto inst = generate_random_instance(static_cast<std::size_t>(state.range(0)), 1,
                                             Distribution::kUniform, 1);
  const auto targets = all_targets(inst);
  for (auto _ : state) benchmark::DoNotOptimize(held_karp(inst.depot_vertex(0), targets, inst).cost);
}
BENCHMARK(BM_HeldKarp)->Arg(8)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_TspHeuristic(benchmark::State& state) {
  const auto inst = generate_random_instance(static_cast<std::size_t>(state.range(0)), 1,
                                             Distribution::kUniform, 1);
  const auto targets = all_targets(inst);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_tsp_heuristic(inst.depot_vertex(0), targets, inst, 0).cost);
  }
}
BENCHMARK(BM_TspHeuristic)->Arg(20)->Arg(99)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveSingle(benchmark::State& state) {
  const auto inst = generate_random_instance(99, 1, Distribution::kUniform, 2);
  const auto p = per_tsp(inst, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_single(inst, 0, p).objective);
}
BENCHMARK(BM_SolveSingle)->Unit(benchmark::kMillisecond);

void BM_SolveMulti(benchmark::State& state) {
  const auto inst = generate_random_instance(static_cast<std::size_t>(state.range(0)),
                                             static_cast<std::size_t>(state.range(1)),
                                             Distribution::kClustered, 3);
  const auto p = per_tsp(inst, 1.0);
  SearchConfig cfg;
  cfg.neighborhood = state.range(2) ? Neighborhood::kMoveAndSwap : Neighborhood::kMoveOnly;
  cfg.top_k = state.range(2) ? 2 : 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_multi(inst, p, cfg).total);
}
BENCHMARK(BM_SolveMulti)
    ->Args({30, 3, 0})
    ->Args({30, 3, 1})
    ->Args({100, 5, 0})
    ->Args({100, 5, 1})
    ->Unit(benchmark::kMillisecond);

void BM_BruteForceMulti(benchmark::State& state) {
  const auto inst = generate_random_instance(8, 2, Distribution::kUniform, 4);
  const auto p = per_tsp(inst, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_multi(inst, p).total);
}
BENCHMARK(BM_BruteForceMulti)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
