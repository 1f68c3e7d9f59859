#include <benchmark/benchmark.h>

#include "latpoly/eventree.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/matching.hpp"

using namespace latpoly;

static void BM_LatticeTable(benchmark::State& state) {
  const int max_i = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LatticeTable table(max_i);
    benchmark::DoNotOptimize(table.at({max_i, max_i / 2}));
  }
}
BENCHMARK(BM_LatticeTable)->Arg(16)->Arg(32)->Arg(48);

static void BM_EnumeratePaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths({2 * n, n}).size());
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(4, 7);

static void BM_EnumerateQ(benchmark::State& state) {
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_q(i, i / 2).size());
}
BENCHMARK(BM_EnumerateQ)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_EnumerateEvenTrees(benchmark::State& state) {
  const int edges = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_even_trees(edges).size());
}
BENCHMARK(BM_EnumerateEvenTrees)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_PathToMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto paths = enumerate_paths({2 * n, n});
  for (auto _ : state)
    for (const auto& p : paths) benchmark::DoNotOptimize(path_to_matching(p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
}
BENCHMARK(BM_PathToMatching)->Arg(5)->Arg(6);

static void BM_TreeRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto paths = enumerate_paths({2 * n, n});
  for (auto _ : state)
    for (const auto& p : paths) benchmark::DoNotOptimize(tree_to_path(path_to_tree(p), {2 * n, n}));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(paths.size()));
}
BENCHMARK(BM_TreeRoundtrip)->Arg(5)->Arg(6);
BENCHMARK_MAIN();
