#include <benchmark/benchmark.h>

#include "genus/cycles.hpp"
#include "genus/distribution.hpp"
#include "genus/engine.hpp"
#include "genus/generators.hpp"
#include "genus/oracle.hpp"

using namespace genus;

namespace {

const char* const kSpecs[] = {
    "complete:7", "complete:8", "bipartite:4,5", "multipartite:2,2,2,2,2", "circulant:18:1,3,9",
    "circulant:20:1,3,5", "cage:5", "cage:6", "cage:7", "cage:8",
};

void BM_CycleCensus(benchmark::State& state) {
  const Graph g = generate(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(count_cycles_by_length(g));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_CycleCensus)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_Distributions(benchmark::State& state) {
  const Graph g = generate("complete:8");
  const auto pop = population_from_counts(count_cycles_by_length(g));
  for (auto _ : state) {
    std::int64_t count = 0;
    generate_distributions_with_faces(pop, g.dart_count(), static_cast<int>(state.range(0)),
                                      [&](const CycleDistribution&) { return ++count, true; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Distributions)->Arg(18)->Arg(16)->Arg(14);

void BM_Genus(benchmark::State& state) {
  const Graph g = generate(kSpecs[state.range(0)]);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const GenusResult r = compute_genus(g);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.genus);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_Genus)->DenseRange(0, 9)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_Oracle(benchmark::State& state) {
  const Graph g = generate(state.range(0) == 0 ? "petersen" : "complete:6");
  OracleOptions exhaustive;
  exhaustive.stop_at_lower_bound = false;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_genus(g, exhaustive).genus);
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
