#include <benchmark/benchmark.h>

#include "rigicount/certify.hpp"
#include "rigicount/enumerate.hpp"
#include "rigicount/graph.hpp"
#include "rigicount/ordering.hpp"
#include "rigicount/props.hpp"
#include "rigicount/random.hpp"
#include "rigicount/rigidity.hpp"

using namespace rigicount;

namespace {

Graph hitting_graph(int n, int d, std::uint64_t seed) {
  const auto sigma = sample_edge_ordering(n, seed);
  return graph_at(sigma, min_degree_threshold(sigma, d));
}

void BM_SampleEdgeOrdering(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_edge_ordering(n, seed++));
}
BENCHMARK(BM_SampleEdgeOrdering)->Arg(100)->Arg(400);

void BM_KCore(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(k_core(g, 3));
}
BENCHMARK(BM_KCore)->Arg(200)->Arg(1000);

void BM_KConnected(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 2, 2);
  const auto core = induced_subgraph(g, k_core(g, 3).survivors).graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_k_connected(core, 3));
}
BENCHMARK(BM_KConnected)->Arg(200)->Arg(500);

void BM_ConstructOrdering(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(construct_ordering(g, 2));
}
BENCHMARK(BM_ConstructOrdering)->Arg(200)->Arg(1000);

void BM_GlobalRigidity(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 2, 4);
  const auto core = induced_subgraph(g, k_core(g, 3).survivors).graph;
  for (auto _ : state) benchmark::DoNotOptimize(global_rigidity(core, 2, 7));
}
BENCHMARK(BM_GlobalRigidity)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CertifyCount(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(certify_count(g, 2, 11));
}
BENCHMARK(BM_CertifyCount)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EnumerateTower(benchmark::State& state) {
  // Triangle followed by a path of 0-extensions: 2^m complex branches.
  const int m = static_cast<int>(state.range(0));
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (int v = 3; v < 3 + m; ++v) {
    edges.emplace_back(v - 1, v);
    edges.emplace_back(v - 2, v);
  }
  const Graph g(3 + m, edges);
  for (auto _ : state) benchmark::DoNotOptimize(count_real_and_complex(g, 2, 3));
}
BENCHMARK(BM_EnumerateTower)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SparsityExact(benchmark::State& state) {
  const auto g = hitting_graph(static_cast<int>(state.range(0)), 1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(check_sparsity(g, CheckMode::exact));
}
BENCHMARK(BM_SparsityExact)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
