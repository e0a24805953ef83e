#include <random>

#include <benchmark/benchmark.h>

#include "broadcast/cyclomatic.hpp"
#include "broadcast/exact_dp.hpp"
#include "broadcast/generators.hpp"
#include "broadcast/kernel.hpp"
#include "broadcast/oracle.hpp"
#include "broadcast/tree_broadcast.hpp"
#include "broadcast/vertex_cover.hpp"

namespace {

using namespace broadcast;

void BM_TreeBroadcast(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Graph g = random_tree(static_cast<Vertex>(state.range(0)), rng);
  TreeView view(g);
  for (auto _ : state) benchmark::DoNotOptimize(tree_broadcast_time(view, 0).time);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeBroadcast)->RangeMultiplier(10)->Range(1'000, 100'000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNLogN);

void BM_ExactDp(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Graph g = random_connected_graph(static_cast<Vertex>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(broadcast_time_exact(g, 0).time);
}
BENCHMARK(BM_ExactDp)->DenseRange(8, 16, 2)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Graph g = random_connected_graph(static_cast<Vertex>(state.range(0)), 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_broadcast_time(g, 0));
}
BENCHMARK(BM_Oracle)->DenseRange(5, 9, 2)->Unit(benchmark::kMillisecond);

void BM_Cyclomatic(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<Vertex>(state.range(0));
  Graph g = random_bounded_cyclomatic_graph(n, 3, rng);
  const Round b = broadcast_time_exact(g, 0).time;
  Instance inst = Instance::make(g, 0, b);
  for (auto _ : state) benchmark::DoNotOptimize(solve_cyclomatic(inst));
}
BENCHMARK(BM_Cyclomatic)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_VertexCover(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<Vertex>(state.range(0));
  Graph g = random_bounded_cover_graph(n, 2, 0.6, rng);
  Instance inst = Instance::make(g, 0, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_vertex_cover_param(inst, 2));
}
BENCHMARK(BM_VertexCover)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Kernelize(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const auto n = static_cast<Vertex>(state.range(0));
  Graph g = random_tree(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kernelize(KernelInstance::make(g, 0, 5)).status);
}
BENCHMARK(BM_Kernelize)->Arg(50)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
