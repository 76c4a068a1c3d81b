#include <benchmark/benchmark.h>

#include "looplab/transfer.hpp"

using namespace looplab;

static void BM_BuildTransfer(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto T = build_transfer_matrix(n);
    benchmark::DoNotOptimize(T.entries.size());
  }
}
BENCHMARK(BM_BuildTransfer)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Commutator(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto T = build_transfer_matrix(n);
  for (auto _ : state) {
    auto rep = commutator_report(T);
    benchmark::DoNotOptimize(rep.zero);
  }
}
BENCHMARK(BM_Commutator)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Stationary(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational p = Rational(1) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(stationary_distribution(n, p));
}
BENCHMARK(BM_Stationary)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
