#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "looplab/matching.hpp"
#include "looplab/pattern.hpp"
#include "looplab/rational.hpp"
#include "looplab/schedule.hpp"
#include "looplab/stats.hpp"
#include "looplab/tiles.hpp"

namespace looplab {

inline constexpr long kDefaultMaxRows = 1000000;

// One circular row of independent tiles, each L with probability p.
Row sample_row(int width, const Rational& p, std::mt19937_64& rng);

// Boundary pattern of the stack of rows consumed so far, grown bottom-up.
// Bottom points stay the original cylinder boundary; top points are the
// current open edge.  Once every bottom point pairs below, the boundary
// matching is settled and later rows cannot change it.
class FrontierState {
 public:
  explicit FrontierState(int width);

  // Composes one more row on top.  Settled bottom-bottom pairs must
  // survive; a violation means a tracing bug, reported as logic_error.
  void advance(const Row& row);

  bool done() const { return bottom_closed(pattern_); }
  long rows_consumed() const { return rows_; }
  long closed_loops() const { return loops_; }
  const AnnularPattern& pattern() const { return pattern_; }
  Matching boundary_matching() const;  // requires done()

 private:
  AnnularPattern pattern_;
  long rows_ = 0;
  long loops_ = 0;
};

struct SampleResult {
  Matching matching;
  long rows_consumed;
};

// Samples rows per the schedule until the boundary matching settles.
// Throws nontermination_error after max_rows rows; schedules whose biases
// sit at 0 or 1 forever can never settle (rows only shift strands).
SampleResult sample_pattern(int width, const BiasSchedule& schedule, std::mt19937_64& rng,
                            long max_rows = kDefaultMaxRows);

// One schedule's empirical law over the canonical matching order.
struct ScheduleRun {
  std::string label;
  BiasSchedule schedule = BiasSchedule::constant(Rational(1) / 2);
  std::vector<long> counts;
  long samples = 0;
  double mean_rows = 0.0;
  long max_rows_seen = 0;
  std::optional<ChiSquareResult> chi_square;  // against the exact law
};

struct SimulationReport {
  int width = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  long max_rows = kDefaultMaxRows;
  std::vector<std::string> order;  // matching text per index
  std::vector<Rational> exact_law;  // empty when no unique law applies
  ScheduleRun run;
  nlohmann::ordered_json to_json() const;
};

struct InvarianceReport {
  int width = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  long max_rows = kDefaultMaxRows;
  std::vector<std::string> order;
  std::vector<Rational> exact_law;
  std::vector<ScheduleRun> runs;
  std::vector<std::vector<double>> tv;  // pairwise total variation
  double max_tv = 0.0;
  nlohmann::ordered_json to_json() const;
};

// Empirical law of the boundary matching under one schedule.  Deterministic
// for fixed (seed, schedule, samples) regardless of threads.
SimulationReport run_simulation(int width, const BiasSchedule& schedule, long samples,
                                std::uint64_t seed, int threads = 1,
                                long max_rows = kDefaultMaxRows);

// Samples every schedule independently (per-schedule derived streams) and
// compares the empirical laws pairwise and against the exact stationary
// law.  Schedules failing the divergence diagnostic are rejected up front.
InvarianceReport run_invariance_experiment(int width, const std::vector<BiasSchedule>& schedules,
                                           long samples, std::uint64_t seed, int threads = 1,
                                           long max_rows = kDefaultMaxRows);

}  // namespace looplab
