#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "nplab/graph6.hpp"
#include "nplab/random.hpp"

namespace {

using namespace nplab;

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = sample_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 5);
  for (auto _ : state) {
    const std::string text = write_graph6(g);
    benchmark::DoNotOptimize(parse_graph6(text));
  }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(8)->Arg(64)->Arg(256);

void BM_Graph6ParseBatch(benchmark::State& state) {
  std::vector<std::string> lines;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) lines.push_back(write_graph6(sample_gnp(8, 0.5, seed)));
  for (auto _ : state) {
    for (const auto& line : lines) benchmark::DoNotOptimize(parse_graph6(line));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * lines.size()));
}
BENCHMARK(BM_Graph6ParseBatch);

}  // namespace
