#include <benchmark/benchmark.h>

#include "looplab/involution.hpp"
#include "looplab/sweeps.hpp"
#include "looplab/tiles.hpp"

using namespace looplab;

static void BM_ExhaustiveSweep(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = involution_sweep(width);
    benchmark::DoNotOptimize(rep.pairs_checked);
  }
  state.SetItemsProcessed(state.iterations() * (1L << (2 * width)));
}
BENCHMARK(BM_ExhaustiveSweep)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Involute(benchmark::State& state) {
  RowPair pair{parse_row("rllrrlrrllrl"), parse_row("lrlrlrllrrrl")};
  for (auto _ : state) benchmark::DoNotOptimize(involute(pair));
}
BENCHMARK(BM_Involute);

static void BM_BlockDetect(benchmark::State& state) {
  RowPair pair{parse_row("rllrrlrrllrl"), parse_row("lrlrlrllrrrl")};
  for (auto _ : state) benchmark::DoNotOptimize(maximal_fundamental_blocks(pair));
}
BENCHMARK(BM_BlockDetect);

BENCHMARK_MAIN();
