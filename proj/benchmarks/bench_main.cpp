#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bpd/decomposition.hpp"
#include "bpd/gadgets.hpp"
#include "bpd/partition.hpp"
#include "bpd/repset.hpp"
#include "bpd/solve.hpp"

using namespace bpd;

namespace {

// Partial k-tree: treewidth at most k, about `keep` percent of the edges kept.
Graph partial_ktree(int n, int k, int keep, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> es;
  std::vector<std::vector<int>> cliques = {{}};
  for (int v = 0; v <= k && v < n; ++v) {
    for (int u : cliques[0]) es.emplace_back(u, v);
    cliques[0].push_back(v);
  }
  for (int v = k + 1; v < n; ++v) {
    auto base = cliques[rng() % cliques.size()];
    base.erase(base.begin() + static_cast<long>(rng() % base.size()));
    for (int u : base) es.emplace_back(u, v);
    base.push_back(v);
    cliques.push_back(base);
  }
  std::vector<Edge> kept;
  for (const auto& e : es) {
    if (static_cast<int>(rng() % 100) < keep) kept.push_back(e);
  }
  return Graph::from_edges(n, kept);
}

void BM_SolveBlock(benchmark::State& state) {
  Instance inst;
  inst.graph = partial_ktree(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 70, 1);
  inst.d = 3;
  inst.k = inst.graph.n() / 4;
  inst.family = PFamily::parse("chordal");
  inst.mode = Mode::Block;
  const auto td = heuristic_td(inst.graph);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, td).yes);
  state.counters["width"] = td.width();
}
BENCHMARK(BM_SolveBlock)->Args({40, 2})->Args({40, 3})->Args({80, 3})->Unit(benchmark::kMillisecond);

void BM_SolveComponent(benchmark::State& state) {
  Instance inst;
  inst.graph = partial_ktree(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 70, 2);
  inst.d = 3;
  inst.k = inst.graph.n() / 4;
  inst.family = PFamily::parse("chordal");
  inst.mode = Mode::Component;
  const auto td = heuristic_td(inst.graph);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst, td).yes);
  state.counters["width"] = td.width();
}
BENCHMARK(BM_SolveComponent)->Args({40, 2})->Args({40, 3})->Unit(benchmark::kMillisecond);

void BM_RepPartitions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto all = all_partitions(m);
  for (auto _ : state) benchmark::DoNotOptimize(rep_partitions(m, all).size());
  state.counters["input"] = static_cast<double>(all.size());
}
BENCHMARK(BM_RepPartitions)->DenseRange(3, 7);

void BM_GenUnbounded(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<int> planted(static_cast<std::size_t>(k), 0);
  const auto g = random_colored_graph(k, 3, 3, 5, planted);
  for (auto _ : state) benchmark::DoNotOptimize(gen_unbounded_d(g, planted).instance.graph.n());
}
BENCHMARK(BM_GenUnbounded)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_HeuristicTd(benchmark::State& state) {
  const auto g = partial_ktree(static_cast<int>(state.range(0)), 5, 60, 3);
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_td(g).width());
}
BENCHMARK(BM_HeuristicTd)->Range(64, 512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
