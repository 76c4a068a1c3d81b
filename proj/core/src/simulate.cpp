#include "looplab/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include "looplab/errors.hpp"
#include "looplab/rng.hpp"
#include "looplab/transfer.hpp"
#include "looplab/version.hpp"

namespace looplab {

Row sample_row(int width, const Rational& p, std::mt19937_64& rng) {
  if (width < 2 || width % 2 != 0)
    throw dimension_error("width must be even and positive");
  if (p < 0 || p > 1)
    throw std::domain_error("bias " + format_rational(p) + " outside [0,1]");
  BernoulliRational coin(p);
  Row row;
  row.tiles.resize(width);
  for (Tile& t : row.tiles) t = coin(rng) ? Tile::L : Tile::R;
  return row;
}

FrontierState::FrontierState(int width) : pattern_(identity_pattern(width)) {}

void FrontierState::advance(const Row& row) {
  if (row.width() != pattern_.width)
    throw dimension_error("row width " + std::to_string(row.width()) +
                          " does not match frontier width " + std::to_string(pattern_.width));
  std::vector<std::pair<int, int>> settled;
  for (int i = 0; i < pattern_.width; ++i) {
    int j = pattern_.pairing.partner(i);
    if (j < pattern_.width && i < j) settled.emplace_back(i, j);
  }
  pattern_ = compose_patterns(pattern_, row_boundary_pairing(row), &loops_);
  ++rows_;
  for (auto [i, j] : settled)
    if (pattern_.pairing.partner(i) != j)
      throw std::logic_error("settled boundary pair changed while advancing the frontier");
}

Matching FrontierState::boundary_matching() const { return bottom_matching(pattern_); }

SampleResult sample_pattern(int width, const BiasSchedule& schedule, std::mt19937_64& rng,
                            long max_rows) {
  if (max_rows < 1) throw std::invalid_argument("max_rows must be >= 1");
  FrontierState state(width);
  std::map<Rational, BernoulliRational> coins;
  Row row;
  row.tiles.resize(width);
  while (!state.done()) {
    if (state.rows_consumed() >= max_rows)
      throw nontermination_error("boundary matching still open after " +
                                     std::to_string(state.rows_consumed()) +
                                     " rows; biases pinned at 0 or 1 only shift strands",
                                 state.rows_consumed());
    Rational p = schedule.bias_at(state.rows_consumed() + 1);
    auto it = coins.find(p);
    if (it == coins.end()) it = coins.emplace(p, BernoulliRational(p)).first;
    for (Tile& t : row.tiles) t = it->second(rng) ? Tile::L : Tile::R;
    state.advance(row);
  }
  return {state.boundary_matching(), state.rows_consumed()};
}

namespace {

constexpr long kChunkSamples = 4096;

struct ChunkResult {
  std::vector<long> counts;
  long total_rows = 0;
  long max_rows_seen = 0;
  std::exception_ptr error;
};

// One schedule's whole sample budget, split into fixed chunks with derived
// streams.  The merge runs in chunk order, so the outcome is the same for
// any worker count.
ScheduleRun run_schedule_samples(int width, const BiasSchedule& schedule, long samples,
                                 std::uint64_t seed, const std::string& label, int threads,
                                 long max_rows, const std::map<Matching, int>& index) {
  long num_chunks = (samples + kChunkSamples - 1) / kChunkSamples;
  std::vector<ChunkResult> results(static_cast<std::size_t>(num_chunks));
  std::atomic<long> next{0};
  auto worker = [&]() {
    for (long k = next.fetch_add(1); k < num_chunks; k = next.fetch_add(1)) {
      ChunkResult& out = results[static_cast<std::size_t>(k)];
      out.counts.assign(index.size(), 0);
      try {
        auto rng = derive_stream(seed, label + "/chunk-" + std::to_string(k));
        long begin = k * kChunkSamples;
        long end = std::min(samples, begin + kChunkSamples);
        for (long i = begin; i < end; ++i) {
          SampleResult s = sample_pattern(width, schedule, rng, max_rows);
          ++out.counts[static_cast<std::size_t>(index.at(s.matching))];
          out.total_rows += s.rows_consumed;
          out.max_rows_seen = std::max(out.max_rows_seen, s.rows_consumed);
        }
      } catch (...) {
        out.error = std::current_exception();
      }
    }
  };
  long workers = std::min<long>(std::max(threads, 1), num_chunks);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const ChunkResult& r : results)
    if (r.error) std::rethrow_exception(r.error);

  ScheduleRun run;
  run.label = label;
  run.schedule = schedule;
  run.samples = samples;
  run.counts.assign(index.size(), 0);
  long total_rows = 0;
  for (const ChunkResult& r : results) {
    for (std::size_t c = 0; c < r.counts.size(); ++c) run.counts[c] += r.counts[c];
    total_rows += r.total_rows;
    run.max_rows_seen = std::max(run.max_rows_seen, r.max_rows_seen);
  }
  run.mean_rows = static_cast<double>(total_rows) / static_cast<double>(samples);
  return run;
}

std::map<Matching, int> canonical_index(const std::vector<Matching>& order) {
  std::map<Matching, int> index;
  for (std::size_t i = 0; i < order.size(); ++i)
    index.emplace(order[i], static_cast<int>(i));
  return index;
}

nlohmann::ordered_json run_to_json(const ScheduleRun& run) {
  nlohmann::ordered_json j;
  j["label"] = run.label;
  j["schedule"] = run.schedule.to_json();
  j["samples"] = run.samples;
  j["counts"] = run.counts;
  auto freq = nlohmann::ordered_json::array();
  for (long c : run.counts)
    freq.push_back(static_cast<double>(c) / static_cast<double>(run.samples));
  j["frequencies"] = freq;
  j["mean_rows"] = run.mean_rows;
  j["max_rows_seen"] = run.max_rows_seen;
  if (run.chi_square)
    j["chi_square"] = nlohmann::ordered_json{{"statistic", run.chi_square->statistic},
                                             {"p_value", run.chi_square->p_value},
                                             {"dof", run.chi_square->dof}};
  return j;
}

nlohmann::ordered_json law_to_json(const std::vector<Rational>& law) {
  auto out = nlohmann::ordered_json::array();
  for (const Rational& v : law) out.push_back(format_rational(v));
  return out;
}

}  // namespace

SimulationReport run_simulation(int width, const BiasSchedule& schedule, long samples,
                                std::uint64_t seed, int threads, long max_rows) {
  if (width < 2 || width % 2 != 0)
    throw dimension_error("width must be even and positive");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (max_rows < 1) throw std::invalid_argument("max_rows must be >= 1");

  auto order = enumerate_matchings(width / 2);
  auto index = canonical_index(order);

  SimulationReport rep;
  rep.width = width;
  rep.samples = samples;
  rep.seed = seed;
  rep.max_rows = max_rows;
  for (const Matching& m : order) rep.order.push_back(format_matching(m));
  // The exact law only applies to schedules the theory covers.
  if (schedule.provably_divergent())
    rep.exact_law = stationary_distribution(width / 2, Rational(1) / 2);
  rep.run = run_schedule_samples(width, schedule, samples, seed, "sim/" + schedule.describe(),
                                 threads, max_rows, index);
  if (rep.exact_law.size() >= 2)
    rep.run.chi_square = chi_square_against(rep.run.counts, rep.exact_law);
  return rep;
}

InvarianceReport run_invariance_experiment(int width, const std::vector<BiasSchedule>& schedules,
                                           long samples, std::uint64_t seed, int threads,
                                           long max_rows) {
  if (width < 2 || width % 2 != 0)
    throw dimension_error("width must be even and positive");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (max_rows < 1) throw std::invalid_argument("max_rows must be >= 1");
  if (schedules.empty()) throw std::invalid_argument("need at least one schedule");
  for (const BiasSchedule& s : schedules)
    if (!s.provably_divergent())
      throw std::domain_error("schedule " + s.describe() +
                              " fails the divergence diagnostic: every bias that recurs "
                              "forever is 0 or 1, so rows only shift strands and the "
                              "boundary matching need not settle");

  auto order = enumerate_matchings(width / 2);
  auto index = canonical_index(order);

  InvarianceReport rep;
  rep.width = width;
  rep.samples = samples;
  rep.seed = seed;
  rep.max_rows = max_rows;
  for (const Matching& m : order) rep.order.push_back(format_matching(m));
  rep.exact_law = stationary_distribution(width / 2, Rational(1) / 2);
  for (std::size_t i = 0; i < schedules.size(); ++i) {
    ScheduleRun run =
        run_schedule_samples(width, schedules[i], samples, seed,
                             "schedule-" + std::to_string(i), threads, max_rows, index);
    if (rep.exact_law.size() >= 2)
      run.chi_square = chi_square_against(run.counts, rep.exact_law);
    rep.runs.push_back(std::move(run));
  }
  rep.tv.assign(rep.runs.size(), std::vector<double>(rep.runs.size(), 0.0));
  for (std::size_t i = 0; i < rep.runs.size(); ++i)
    for (std::size_t j = i + 1; j < rep.runs.size(); ++j) {
      double d = total_variation(rep.runs[i].counts, rep.runs[j].counts);
      rep.tv[i][j] = rep.tv[j][i] = d;
      rep.max_tv = std::max(rep.max_tv, d);
    }
  return rep;
}

nlohmann::ordered_json SimulationReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["width"] = width;
  j["samples"] = samples;
  j["seed"] = seed;
  j["max_rows"] = max_rows;
  j["order"] = order;
  j["exact_law"] = exact_law.empty() ? nlohmann::ordered_json() : law_to_json(exact_law);
  j["run"] = run_to_json(run);
  return j;
}

nlohmann::ordered_json InvarianceReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["width"] = width;
  j["samples"] = samples;
  j["seed"] = seed;
  j["max_rows"] = max_rows;
  j["order"] = order;
  j["exact_law"] = law_to_json(exact_law);
  j["runs"] = nlohmann::ordered_json::array();
  for (const ScheduleRun& run : runs) j["runs"].push_back(run_to_json(run));
  j["tv"] = tv;
  j["max_tv"] = max_tv;
  return j;
}

}  // namespace looplab
