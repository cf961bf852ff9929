#include <benchmark/benchmark.h>

#include <random>

#include "cis/canonical.hpp"
#include "cis/counting.hpp"
#include "cis/enumeration.hpp"
#include "cis/families.hpp"

namespace {

using namespace cis;

Graph random_connected(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  for (;;) {
    Graph g = Graph::empty(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) g = g.with_edge(i, j);
    if (is_connected(g)) return g;
  }
}

void BM_CountSweep(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_cis_by_sweep(g));
}
BENCHMARK(BM_CountSweep)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_CountSplitSparse(benchmark::State& state) {
  const Graph g = build_double_tadpole(static_cast<int>(state.range(0)), 4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(count_cis_by_split(g));
}
BENCHMARK(BM_CountSplitSparse)->DenseRange(12, 32, 10)->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(6, 12, 3);

void BM_CanonicalFormSymmetric(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormSymmetric)->DenseRange(6, 12, 3);

// Children of every order-6 class: the cost of generating order 7.
void BM_AugmentLevel(benchmark::State& state) {
  const auto& parents = enumerate_connected(6);
  for (auto _ : state) {
    std::size_t children = 0;
    for (const Graph& p : parents) children += augment(p).size();
    benchmark::DoNotOptimize(children);
  }
}
BENCHMARK(BM_AugmentLevel)->Unit(benchmark::kMillisecond);

void BM_ExtremalSearch(benchmark::State& state) {
  GraphClass cls;
  cls.n = static_cast<int>(state.range(0));
  cls.two_connected = true;
  enumerate_connected(cls.n);
  for (auto _ : state) benchmark::DoNotOptimize(extremal_search(cls, Objective::Min, 1));
}
BENCHMARK(BM_ExtremalSearch)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
