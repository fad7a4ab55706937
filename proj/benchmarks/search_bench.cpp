#include <benchmark/benchmark.h>

#include "nplab/construct.hpp"
#include "nplab/generators.hpp"
#include "nplab/search.hpp"

namespace {

using namespace nplab;

void BM_SearchNplPetersen(benchmark::State& state) {
  const Graph g = gen_generalized_petersen(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(search_npl_labeling(g));
}
BENCHMARK(BM_SearchNplPetersen)->Arg(5)->Arg(11)->Arg(17)->Arg(23);

void BM_SearchNplExhaustCycle(benchmark::State& state) {
  const Graph g = gen_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(search_npl_labeling(g));
}
BENCHMARK(BM_SearchNplExhaustCycle)->Arg(6)->Arg(10)->Arg(14);

void BM_EvenSetObstruction(benchmark::State& state) {
  const Graph g = gen_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(even_set_obstruction(g));
}
BENCHMARK(BM_EvenSetObstruction)->Arg(10)->Arg(14)->Arg(18);

void BM_CertifyGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(label_grid(side, side + 1));
}
BENCHMARK(BM_CertifyGrid)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
