#include <benchmark/benchmark.h>

#include "looplab/rng.hpp"
#include "looplab/simulate.hpp"

using namespace looplab;

static void BM_SamplePattern(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  auto schedule = BiasSchedule::constant(Rational(1) / 2);
  auto rng = derive_stream(1, "bench");
  long rows = 0;
  for (auto _ : state) {
    auto res = sample_pattern(width, schedule, rng);
    rows += res.rows_consumed;
    benchmark::DoNotOptimize(res.matching);
  }
  state.counters["rows/sample"] =
      benchmark::Counter(static_cast<double>(rows) / static_cast<double>(state.iterations()));
}
BENCHMARK(BM_SamplePattern)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

static void BM_SampleRow(benchmark::State& state) {
  int width = static_cast<int>(state.range(0));
  Rational p = Rational(2) / 5;
  auto rng = derive_stream(1, "bench");
  for (auto _ : state) benchmark::DoNotOptimize(sample_row(width, p, rng));
}
BENCHMARK(BM_SampleRow)->Arg(8)->Arg(32);
