#include <benchmark/benchmark.h>

#include "scdeck/deck.hpp"
#include "scdeck/enumerate.hpp"
#include "scdeck/verify.hpp"

namespace {

void BM_EnumerateSC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scdeck::enumerate_sc(n));
}
BENCHMARK(BM_EnumerateSC)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_DeckSignature(benchmark::State& state) {
  const auto graphs = scdeck::enumerate_sc(9);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scdeck::deck_signature(graphs[i % graphs.size()]));
    ++i;
  }
}
BENCHMARK(BM_DeckSignature);

void BM_VerifyCertificateMode(benchmark::State& state) {
  const auto graphs = scdeck::enumerate_sc(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        scdeck::verify_all(graphs, scdeck::VerifyMode::certificate));
  }
}
BENCHMARK(BM_VerifyCertificateMode)->Unit(benchmark::kMillisecond);

}  // namespace
