#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cmperm/cmperm.hpp"

using namespace cmperm;

namespace {

Permutation random_permutation(int n, std::uint64_t seed) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 1);
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return Permutation(seq);
}

// Disjoint union of ordinal sums: a CM-friendly shape that grows with n.
Permutation layered(int n) {
  std::vector<Vertex> seq;
  for (int base = 0; base < n; base += 2) {
    const int top = std::min(base + 2, n);
    for (int v = top; v > base; --v) seq.push_back(v);
  }
  return Permutation(seq);
}

void BM_MaximalCliques(benchmark::State& state) {
  const Graph g = perm_graph_id(random_permutation(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(16)->Arg(32)->Arg(64);

void BM_Recognition(benchmark::State& state) {
  const Graph g = perm_graph_id(random_permutation(static_cast<int>(state.range(0)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(recognize_permutation_graph(g));
}
BENCHMARK(BM_Recognition)->Arg(16)->Arg(32)->Arg(64);

void BM_CmCharacterization(benchmark::State& state) {
  const Graph g = perm_graph_id(layered(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_cm_permutation(g));
}
BENCHMARK(BM_CmCharacterization)->Arg(8)->Arg(16)->Arg(32);

void BM_HomologyOracle(benchmark::State& state) {
  const Graph g = perm_graph_id(layered(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_is_cm_graph(g));
}
BENCHMARK(BM_HomologyOracle)->Arg(6)->Arg(8)->Arg(10);

void BM_Upo(benchmark::State& state) {
  const Graph g = complement(perm_graph_id(random_permutation(static_cast<int>(state.range(0)), 3)));
  for (auto _ : state) benchmark::DoNotOptimize(is_upo(g));
}
BENCHMARK(BM_Upo)->Arg(8)->Arg(12)->Arg(16);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Survey)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
