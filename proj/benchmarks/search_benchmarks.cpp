#include <benchmark/benchmark.h>

#include "bondcycle/bonds.hpp"
#include "bondcycle/conjecture.hpp"
#include "bondcycle/cycles.hpp"
#include "bondcycle/generators.hpp"
#include "bondcycle/graph_io.hpp"

using namespace bondcycle;

static void BM_LargestBondPetersen(benchmark::State& state) {
  const Graph g = petersen(static_cast<int>(state.range(0)), 2).graph;
  for (auto _ : state) {
    Bond b = largest_bond(g);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_LargestBondPetersen)->Arg(6)->Arg(8)->Arg(10)->Arg(12);

static void BM_CoSpectrumPetersen(benchmark::State& state) {
  const Graph g = petersen(static_cast<int>(state.range(0)), 2).graph;
  for (auto _ : state) {
    CoSpectrum s = co_spectrum(g);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CoSpectrumPetersen)->Arg(7)->Arg(9)->Arg(11);

static void BM_CircumferencePetersen(benchmark::State& state) {
  const Graph g = petersen(static_cast<int>(state.range(0)), 2).graph;
  for (auto _ : state) {
    int c = circumference(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CircumferencePetersen)->Arg(8)->Arg(10)->Arg(12);

static void BM_AllLongestCyclesCounterexample(benchmark::State& state) {
  const Graph g = counterexample_two_connected(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    auto cycles = all_longest_cycles(g);
    benchmark::DoNotOptimize(cycles);
  }
}
BENCHMARK(BM_AllLongestCyclesCounterexample)->Arg(5)->Arg(6)->Arg(8);

static void BM_AllLargestBondsCounterexample(benchmark::State& state) {
  const Graph g = counterexample_two_connected(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) {
    auto bonds = all_largest_bonds(g);
    benchmark::DoNotOptimize(bonds);
  }
}
BENCHMARK(BM_AllLargestBondsCounterexample)->Arg(5)->Arg(6);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = petersen(static_cast<int>(state.range(0)), 3).graph;
  for (auto _ : state) {
    Graph back = parse_graph6(write_graph6(g));
    benchmark::DoNotOptimize(back);
  }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(8)->Arg(20)->Arg(31);

static void BM_ConjectureSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GraphEnumerator stream(n);
    SweepSummary summary = batch_verify([&] { return stream.next(); }, {});
    benchmark::DoNotOptimize(summary);
  }
}
BENCHMARK(BM_ConjectureSweep)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
