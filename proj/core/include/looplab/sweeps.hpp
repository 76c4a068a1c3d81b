#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

#include "looplab/tiles.hpp"

namespace looplab {

struct SweepOptions {
  long random_pairs = 0;  // 0 = exhaustive over all 4^width pairs
  std::uint64_t seed = 0;
  int threads = 1;
};

struct SweepCounts {
  long involutive = 0;     // involute(involute(x)) != x
  long pattern = 0;        // boundary pattern changed
  long count_switch = 0;   // per-row tile counts did not swap
  long equivariance = 0;   // involute does not commute with rotation
  long disjoint = 0;       // blocks overlap or miss a marked column
  long stability = 0;      // involute changed the interval set
  long block_pattern = 0;  // a single block rotation changed the pattern
  long total() const {
    return involutive + pattern + count_switch + equivariance + disjoint + stability +
           block_pattern;
  }
};

struct SweepReport {
  int width = 0;
  bool exhaustive = true;
  long pairs_checked = 0;
  long special_pairs = 0;
  SweepCounts failures;
  std::string first_failure;
  bool ok() const { return failures.total() == 0; }
  nlohmann::ordered_json to_json() const;
};

// Runs every involution property on one pair, incrementing the counters of
// whatever failed.  Returns true when the pair passed all of them.
bool check_pair(const RowPair& pair, SweepCounts& failures, bool* special = nullptr);

// Property sweep over row pairs of one width: all 4^width of them, or
// random_pairs sampled ones.  Deterministic for a fixed seed and options,
// whatever the thread count.
SweepReport involution_sweep(int width, const SweepOptions& opts = {});

}  // namespace looplab
