#include <benchmark/benchmark.h>

#include "sumfree/sets.hpp"

namespace {

const std::vector<std::vector<int>> kShapes{{12}, {2, 2, 2, 2}, {4, 4}, {2, 2, 2, 2, 2}, {20}};

void BM_EnumerateMsf(benchmark::State& state) {
  const auto g = sumfree::make_group(kShapes[static_cast<std::size_t>(state.range(0))]);
  const auto mode = state.range(1) == 0 ? sumfree::SumFreeMode::SumFree : sumfree::SumFreeMode::Distinct;
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::enumerate_msf(g, mode, 32).size());
  state.SetLabel(g.to_string() + " " + sumfree::to_string(mode));
}
BENCHMARK(BM_EnumerateMsf)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_MuBrute(benchmark::State& state) {
  const auto g = sumfree::make_group({static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::mu_brute(g));
}
BENCHMARK(BM_MuBrute)->DenseRange(12, 24, 4);

void BM_LinkReduction(benchmark::State& state) {
  const auto g = sumfree::make_group(kShapes[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) benchmark::DoNotOptimize(sumfree::verify_link_reduction(g).pairs);
  state.SetLabel(g.to_string());
}
BENCHMARK(BM_LinkReduction)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_VerifyThm31Sample(benchmark::State& state) {
  const auto g = sumfree::make_group({3, 3, 23, 29});
  const auto family = sumfree::construct_af_family(
      g, sumfree::AfPattern::Thm31, {.sample_size = static_cast<std::size_t>(state.range(0)), .seed = 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sumfree::verify_family(g, family.sets, sumfree::SumFreeMode::SumFree, 1).ok());
  }
}
BENCHMARK(BM_VerifyThm31Sample)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
