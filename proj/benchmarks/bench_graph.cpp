#include <benchmark/benchmark.h>

#include <random>

#include "sumfree/bounds.hpp"
#include "sumfree/graph.hpp"

namespace {

sumfree::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  sumfree::Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_MisCountRandom(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::mis_count(g));
  state.counters["mis"] = static_cast<double>(sumfree::mis_count(g));
}
BENCHMARK(BM_MisCountRandom)->DenseRange(16, 48, 8);

void BM_MisCountPrismPlus(benchmark::State& state) {
  const auto g = sumfree::gadgets::prism_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::mis_count(g));
}
BENCHMARK(BM_MisCountPrismPlus)->DenseRange(8, 32, 8);

void BM_MatchingNumber(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::matching_number(g));
}
BENCHMARK(BM_MatchingNumber)->RangeMultiplier(2)->Range(8, 64);

void BM_Sweep(benchmark::State& state) {
  const sumfree::SweepOptions options{.n_max = static_cast<int>(state.range(0)), .jobs = 1};
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::exhaustive_sweep(options).graphs);
}
BENCHMARK(BM_Sweep)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace
