#include <benchmark/benchmark.h>

#include "nplab/generators.hpp"
#include "nplab/hamilton.hpp"
#include "nplab/random.hpp"

namespace {

using namespace nplab;

void BM_HamiltonPetersen(benchmark::State& state) {
  const Graph g = gen_generalized_petersen(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(g));
}
BENCHMARK(BM_HamiltonPetersen)->Arg(10)->Arg(20)->Arg(40);

void BM_HamiltonRandomCubic(benchmark::State& state) {
  const Graph g = sample_gnd(static_cast<std::size_t>(state.range(0)), 3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(g));
}
BENCHMARK(BM_HamiltonRandomCubic)->Arg(16)->Arg(32)->Arg(64);

void BM_CycleMissingOneGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_grid({side, side});
  for (auto _ : state) benchmark::DoNotOptimize(find_cycle_missing_one(g));
}
BENCHMARK(BM_CycleMissingOneGrid)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
