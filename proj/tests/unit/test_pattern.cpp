#include <doctest.h>

#include <vector>

#include "looplab/errors.hpp"
#include "looplab/matching.hpp"
#include "looplab/pattern.hpp"
#include "looplab/tiles.hpp"
#include "oracles.hpp"

using namespace looplab;

namespace {

AnnularPattern pat_of(const std::string& row_text) {
  return row_boundary_pairing(parse_row(row_text));
}

}  // namespace

TEST_CASE("single-row pairings, hand-traced") {
  // Bottom points 0..L-1, top points L..2L-1.
  // An all-l row joins bottom i to top i-1; all-r joins bottom i to top i+1.
  CHECK(pat_of("llll").pairing == Pairing({7, 4, 5, 6, 1, 2, 3, 0}));
  CHECK(pat_of("rrrr").pairing == Pairing({5, 6, 7, 4, 3, 0, 1, 2}));
  // Width 2: both mixed rows close bottom and top separately.
  CHECK(pat_of("rl").pairing == Pairing({1, 0, 3, 2}));
  CHECK(pat_of("lr").pairing == Pairing({1, 0, 3, 2}));
  CHECK(pat_of("ll").pairing == Pairing({3, 2, 1, 0}));
  // Width 4, alternating: rlrl closes bottom pairs {0,1}, {2,3}.
  CHECK(pat_of("rlrl").pairing == Pairing({1, 0, 3, 2, 7, 6, 5, 4}));
  CHECK(pat_of("lrlr").pairing == Pairing({3, 2, 1, 0, 5, 4, 7, 6}));
}

TEST_CASE("row pairings agree with the union-find oracle") {
  for (int L : {2, 3, 4, 5, 6, 8})
    for (const auto& row : oracles::all_rows(L))
      CHECK(row_boundary_pairing(row) == oracles::row_pairing(row));
}

TEST_CASE("a lone row never closes a loop") {
  long loops = 0;
  auto pat = compose_patterns(identity_pattern(4), pat_of("llrr"), &loops);
  CHECK(loops == 0);
  CHECK(pat == pat_of("llrr"));
}

TEST_CASE("identity pattern is neutral for composition") {
  for (const auto& row : oracles::all_rows(4)) {
    auto pat = row_boundary_pairing(row);
    CHECK(compose_patterns(identity_pattern(4), pat) == pat);
    CHECK(compose_patterns(pat, identity_pattern(4)) == pat);
  }
}

TEST_CASE("composition closes loops trapped between layers") {
  // rl closes its top as {2,3}; lr closes its bottom as {0,1}; stacking the
  // two traps that pair as one loop.
  long loops = 0;
  auto pat = compose_patterns(pat_of("rl"), pat_of("lr"), &loops);
  CHECK(loops == 1);
  CHECK(pat.pairing == Pairing({1, 0, 3, 2}));
}

TEST_CASE("composition is associative") {
  auto rows = oracles::all_rows(4);
  for (std::size_t a = 0; a < rows.size(); a += 3)
    for (std::size_t b = 1; b < rows.size(); b += 5)
      for (std::size_t c = 2; c < rows.size(); c += 7) {
        auto pa = row_boundary_pairing(rows[a]);
        auto pb = row_boundary_pairing(rows[b]);
        auto pc = row_boundary_pairing(rows[c]);
        CHECK(compose_patterns(compose_patterns(pa, pb), pc) ==
              compose_patterns(pa, compose_patterns(pb, pc)));
      }
}

TEST_CASE("loop count adds over composition order") {
  // Stacking (rl on lr) twice: each junction traps one loop.
  long first = 0, second = 0;
  auto lower = compose_patterns(pat_of("rl"), pat_of("lr"), &first);
  compose_patterns(lower, compose_patterns(pat_of("rl"), pat_of("lr"), &second));
  CHECK(first == 1);
  CHECK(second == 1);
}

TEST_CASE("all-l action rotates a matching forward, all-r backward") {
  for (int n : {1, 2, 3, 4}) {
    Row all_l = parse_row(std::string(2 * n, 'l'));
    Row all_r = parse_row(std::string(2 * n, 'r'));
    for (const auto& m : enumerate_matchings(n)) {
      CHECK(act_row(all_l, m) == rotate_matching(m, 1));
      CHECK(act_row(all_r, m) == rotate_matching(m, -1));
    }
  }
}

TEST_CASE("row action agrees with the union-find oracle") {
  for (int n : {1, 2, 3}) {
    auto ms = enumerate_matchings(n);
    for (const auto& row : oracles::all_rows(2 * n))
      for (const auto& m : ms) CHECK(act_row(row, m) == oracles::act(row, m));
  }
}

TEST_CASE("row action always lands on a noncrossing matching") {
  for (int n : {1, 2, 3})
    for (const auto& row : oracles::all_rows(2 * n))
      for (const auto& m : enumerate_matchings(n))
        CHECK_NOTHROW(Matching(act_row(row, m).partners()));
}

TEST_CASE("alternating rows force the fully paired matching") {
  // rlrl closes bottom as (1,2),(3,4) whatever the matching above.
  Row row = parse_row("rlrl");
  for (const auto& m : enumerate_matchings(2))
    CHECK(act_row(row, m) == Matching({1, 0, 3, 2}));
}

TEST_CASE("act_stack applies rows from the top down") {
  Matching m({1, 0, 3, 2});
  Row a = parse_row("lrll"), b = parse_row("rrlr");
  CHECK(act_stack({a, b}, m) == act_row(a, act_row(b, m)));
  CHECK(act_stack({}, m) == m);
}

TEST_CASE("act_pattern rejects width mismatch") {
  CHECK_THROWS_AS(act_row(parse_row("rl"), Matching({1, 0, 3, 2})), dimension_error);
}

TEST_CASE("stack_boundary_pattern composes bottom under top") {
  RowPair pair{parse_row("rl"), parse_row("lr")};
  // bottom row lr closes {0,1}; top row rl contributes its own closures.
  CHECK(stack_boundary_pattern(pair).pairing == Pairing({1, 0, 3, 2}));
  long loops = 0;
  auto expect = compose_patterns(pat_of("lr"), pat_of("rl"), &loops);
  CHECK(stack_boundary_pattern(pair) == expect);
}

TEST_CASE("rotating a row rotates its pattern") {
  for (const auto& row : oracles::all_rows(6)) {
    auto rotated = row_boundary_pairing(rotate_row(row, 1));
    CHECK(rotated == rotate_pattern(row_boundary_pairing(row), 1));
  }
}

TEST_CASE("rotate_pattern has period width") {
  auto pat = pat_of("llrlrr");
  CHECK(rotate_pattern(pat, 6) == pat);
  CHECK(rotate_pattern(rotate_pattern(pat, 2), -2) == pat);
}

TEST_CASE("bottom closure detection") {
  CHECK_FALSE(bottom_closed(identity_pattern(4)));
  CHECK(bottom_closed(pat_of("rl")));
  CHECK_FALSE(bottom_closed(pat_of("ll")));
  CHECK(bottom_matching(pat_of("rl")) == Matching({1, 0}));
  CHECK_THROWS_AS(bottom_matching(pat_of("ll")), structure_error);
}

TEST_CASE("pattern JSON round trip") {
  auto pat = pat_of("lrlrrl");
  auto j = pattern_to_json(pat);
  CHECK(j["width"] == 6);
  CHECK(j["partner"].size() == 12);
  CHECK(pattern_from_json(j) == pat);
}
