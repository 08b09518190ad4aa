#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "tdorg/aux_graphs.hpp"
#include "tdorg/buried.hpp"
#include "tdorg/classify.hpp"
#include "tdorg/generators.hpp"
#include "tdorg/graph.hpp"
#include "tdorg/independence.hpp"
#include "tdorg/oracle.hpp"
#include "tdorg/representation.hpp"

namespace {

// Largest connected component of a twin-collapsed random 2DORG on n + n vertices.
tdorg::BipartiteGraph sample(int n, std::uint64_t seed = 1) {
  const auto g = tdorg::collapse_twins(tdorg::random_2dorg(n, n, seed).graph).graph;
  std::vector<int> best;
  for (const auto& c : tdorg::connectivity(g)) {
    if (c.vertices.size() <= best.size()) continue;
    best.clear();
    for (const auto& v : c.vertices) best.push_back(g.id(v));
  }
  return tdorg::induced_subgraph(g, best);
}

void BM_Recognize(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tdorg::recognize(g));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_Recognize)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_GStar(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tdorg::g_star_is_bipartite(g));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_GStar)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Construct(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tdorg::construct_normalized_representation(g));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_Construct)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateOrientations(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  const auto ig = tdorg::build_independence_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(tdorg::enumerate_transitive_orientations(ig));
  state.counters["class_pairs"] = static_cast<double>(ig.class_pairs().size());
}
BENCHMARK(BM_EnumerateOrientations)->Arg(8)->Arg(12);

void BM_FindBuried(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tdorg::find_buried_subgraph(g));
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_FindBuried)->Arg(8)->Arg(16)->Arg(32);

void BM_OraclePruned(benchmark::State& state) {
  const auto g = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdorg::brute_force_normalized_representations(g, tdorg::OracleRoute::Pruned));
  }
  state.counters["vertices"] = g.vertex_count();
}
BENCHMARK(BM_OraclePruned)->Arg(4)->Arg(5)->Arg(6);

void BM_OracleNaive(benchmark::State& state) {
  const auto g = tdorg::BipartiteGraph(3, 3, std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {2, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdorg::brute_force_normalized_representations(g, tdorg::OracleRoute::Naive));
  }
}
BENCHMARK(BM_OracleNaive);

void BM_OraclePrunedGS(benchmark::State& state) {
  const std::vector<std::pair<int, int>> edges = {{0, 0}, {0, 1}, {0, 3}, {0, 4}, {1, 1}, {1, 3},
                                                  {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {4, 4}};
  const auto g = tdorg::BipartiteGraph(5, 5, edges);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tdorg::brute_force_normalized_representations(g, tdorg::OracleRoute::Pruned));
  }
}
BENCHMARK(BM_OraclePrunedGS);

}  // namespace

BENCHMARK_MAIN();
