#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>

#include "looplab/errors.hpp"
#include "looplab/rng.hpp"
#include "looplab/simulate.hpp"

using namespace looplab;

TEST_CASE("degenerate biases pin every tile") {
  std::mt19937_64 rng(1);
  Row all_l = sample_row(6, Rational(1), rng);
  CHECK(count_tiles(all_l, Tile::L) == 6);
  Row all_r = sample_row(6, Rational(0), rng);
  CHECK(count_tiles(all_r, Tile::R) == 6);
  CHECK_THROWS_AS(sample_row(5, Rational(1) / 2, rng), dimension_error);
  CHECK_THROWS_AS(sample_row(4, Rational(3) / 2, rng), std::domain_error);
}

TEST_CASE("frontier settles once every bottom point pairs below") {
  FrontierState state(2);
  CHECK_FALSE(state.done());
  state.advance(parse_row("rl"));
  CHECK(state.done());
  CHECK(state.rows_consumed() == 1);
  CHECK(state.boundary_matching() == Matching({1, 0}));

  // Later rows cannot change a settled boundary.
  state.advance(parse_row("ll"));
  CHECK(state.boundary_matching() == Matching({1, 0}));
}

TEST_CASE("pinned rows only shift strands and never settle") {
  FrontierState state(4);
  for (int i = 0; i < 20; ++i) state.advance(parse_row("llll"));
  CHECK_FALSE(state.done());
  CHECK(state.rows_consumed() == 20);
}

TEST_CASE("frontier rejects rows of the wrong width") {
  FrontierState state(4);
  CHECK_THROWS_AS(state.advance(parse_row("rl")), dimension_error);
}

TEST_CASE("sample_pattern returns a settled matching") {
  auto rng = derive_stream(42, "unit");
  auto res = sample_pattern(2, BiasSchedule::constant(Rational(1) / 2), rng);
  CHECK(res.matching == Matching({1, 0}));
  CHECK(res.rows_consumed >= 1);
}

TEST_CASE("row budget exhaustion reports the rows consumed") {
  auto rng = derive_stream(42, "unit");
  try {
    sample_pattern(4, BiasSchedule::constant(Rational(1)), rng, 50);
    FAIL("expected nontermination_error");
  } catch (const nontermination_error& e) {
    CHECK(e.rows_consumed == 50);
  }
}

TEST_CASE("simulation counts sum to the sample budget") {
  auto rep = run_simulation(4, BiasSchedule::constant(Rational(1) / 2), 500, 7);
  CHECK(rep.run.samples == 500);
  CHECK(std::accumulate(rep.run.counts.begin(), rep.run.counts.end(), 0L) == 500);
  REQUIRE(rep.order.size() == 2);
  CHECK(rep.order[0] == "(1,2),(3,4)");
  REQUIRE(rep.exact_law.size() == 2);
  CHECK(rep.exact_law[0] == Rational(1) / 2);
  CHECK(rep.run.chi_square.has_value());
}

TEST_CASE("simulation is deterministic in the seed") {
  auto a = run_simulation(4, BiasSchedule::constant(Rational(2) / 5), 300, 99);
  auto b = run_simulation(4, BiasSchedule::constant(Rational(2) / 5), 300, 99);
  CHECK(a.to_json().dump() == b.to_json().dump());
  auto c = run_simulation(4, BiasSchedule::constant(Rational(2) / 5), 300, 100);
  CHECK(a.to_json().dump() != c.to_json().dump());
}

TEST_CASE("worker count never changes the outcome") {
  auto one = run_simulation(4, BiasSchedule::cyclic({Rational(1) / 5, Rational(4) / 5}),
                            9000, 2026, 1);
  auto three = run_simulation(4, BiasSchedule::cyclic({Rational(1) / 5, Rational(4) / 5}),
                              9000, 2026, 3);
  CHECK(one.to_json().dump() == three.to_json().dump());
}

TEST_CASE("no exact law is claimed outside the divergence diagnostic") {
  // All the mass sits in a long interior prefix; the tail is pinned at 0, so
  // the diagnostic refuses the schedule even though every sample settles.
  std::vector<Rational> prefix(40, Rational(1) / 2);
  auto schedule = BiasSchedule::explicit_rows(prefix, Rational(0));
  REQUIRE_FALSE(schedule.provably_divergent());
  auto rep = run_simulation(2, schedule, 200, 7, 1, 100);
  CHECK(rep.exact_law.empty());
  CHECK_FALSE(rep.run.chi_square.has_value());
  CHECK(rep.to_json()["exact_law"].is_null());
}

TEST_CASE("invariance experiment compares schedules pairwise") {
  std::vector<BiasSchedule> schedules = {
      BiasSchedule::constant(Rational(1) / 2),
      BiasSchedule::cyclic({Rational(1) / 5, Rational(4) / 5}),
  };
  auto rep = run_invariance_experiment(4, schedules, 4000, 11);
  REQUIRE(rep.runs.size() == 2);
  CHECK(rep.tv.size() == 2);
  CHECK(rep.tv[0][1] == rep.tv[1][0]);
  CHECK(rep.max_tv == rep.tv[0][1]);
  CHECK(rep.max_tv < 0.05);
  for (const auto& run : rep.runs)
    CHECK(std::accumulate(run.counts.begin(), run.counts.end(), 0L) == 4000);
}

TEST_CASE("invariance experiment rejects non-divergent schedules up front") {
  std::vector<BiasSchedule> schedules = {BiasSchedule::constant(Rational(1))};
  CHECK_THROWS_AS(run_invariance_experiment(4, schedules, 10, 1), std::domain_error);
}

TEST_CASE("artifact JSON never records the worker count") {
  auto sim = run_simulation(4, BiasSchedule::constant(Rational(1) / 2), 100, 5, 2);
  CHECK_FALSE(sim.to_json().contains("threads"));
  auto inv = run_invariance_experiment(4, {BiasSchedule::constant(Rational(1) / 2),
                                           BiasSchedule::constant(Rational(1) / 3)},
                                       100, 5, 2);
  CHECK_FALSE(inv.to_json().contains("threads"));
}

TEST_CASE("simulation input validation") {
  auto half = BiasSchedule::constant(Rational(1) / 2);
  CHECK_THROWS_AS(run_simulation(3, half, 10, 1), dimension_error);
  CHECK_THROWS_AS(run_simulation(4, half, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_simulation(4, half, 10, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_invariance_experiment(4, {}, 10, 1), std::invalid_argument);
}
