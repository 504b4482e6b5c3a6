#include <benchmark/benchmark.h>

#include "scdeck/count.hpp"

namespace {

void BM_ScCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scdeck::sc_count(n));
}
BENCHMARK(BM_ScCount)->Arg(17)->Arg(53)->Arg(101);

void BM_CountsTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scdeck::counts_table(101));
}
BENCHMARK(BM_CountsTable);

}  // namespace
