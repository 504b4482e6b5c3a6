#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "scdeck/canonical.hpp"
#include "scdeck/charpoly.hpp"
#include "scdeck/graph.hpp"

namespace {

std::vector<scdeck::Graph> random_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<scdeck::Graph> out;
  for (int t = 0; t < count; ++t) {
    scdeck::Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    out.push_back(g);
  }
  return out;
}

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 64, 42);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scdeck::canonical_form(graphs[i % graphs.size()]));
    ++i;
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(9)->Arg(13)->Arg(17)->Arg(24);

void BM_Refine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 64, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& g = graphs[i % graphs.size()];
    benchmark::DoNotOptimize(scdeck::refine(g, scdeck::unit_partition(n)));
    ++i;
  }
}
BENCHMARK(BM_Refine)->Arg(13)->Arg(32)->Arg(64);

void BM_CharPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 16, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scdeck::char_poly(graphs[i % graphs.size()]));
    ++i;
  }
}
BENCHMARK(BM_CharPoly)->Arg(13)->Arg(17)->Arg(32);

}  // namespace
