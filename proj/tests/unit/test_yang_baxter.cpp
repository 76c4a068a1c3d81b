#include <doctest.h>

#include <algorithm>
#include <vector>

#include "looplab/errors.hpp"
#include "looplab/involution.hpp"
#include "looplab/yang_baxter.hpp"

using namespace looplab;

namespace {

std::vector<Rational> weight_multiset(const std::map<Pairing, Rational>& dist) {
  std::vector<Rational> out;
  for (const auto& [pat, w] : dist) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("aux cell pairings") {
  CHECK(aux_pairing(AuxState::Pass) == Pairing({2, 3, 0, 1}));
  CHECK(aux_pairing(AuxState::Reflect) == Pairing({1, 0, 3, 2}));
}

TEST_CASE("crossing weight formula") {
  CHECK(solve_s(Rational(1) / 4, Rational(1) / 2) == Rational(5) / 7);
  CHECK(solve_s(Rational(1) / 2, Rational(9) / 10) == Rational(11) / 19);
  for (const Rational& p : {Rational(1) / 5, Rational(1) / 2, Rational(7) / 9})
    CHECK(solve_s(p, p) == Rational(1));
}

TEST_CASE("singular crossing parameters are rejected") {
  // 1 - p + pq = 0 at p = 2, q = 1/2.
  CHECK_THROWS_AS(solve_s(Rational(2), Rational(1) / 2), singular_parameter_error);
}

TEST_CASE("triangle distribution is a probability law with five patterns") {
  Rational p = Rational(1) / 4, q = Rational(1) / 2;
  Rational s = solve_s(p, q);
  for (auto side : {TriangleSide::AuxLeft, TriangleSide::AuxRight}) {
    auto dist = triangle_distribution(side, p, q, s);
    CHECK(dist.size() == 5);
    Rational total(0);
    for (const auto& [pat, w] : dist) {
      CHECK(pat.size() == 6);
      total += w;
    }
    CHECK(total == Rational(1));
  }
}

TEST_CASE("frozen triangle weights at p=1/4, q=1/2") {
  Rational p = Rational(1) / 4, q = Rational(1) / 2;
  Rational s = solve_s(p, q);
  std::vector<Rational> expected = {p * q * s,
                                    (1 - p) * (1 - q) * s,
                                    (1 - p) * q * (1 - s),
                                    (1 - p) * q * s};
  Rational rest(1);
  for (const auto& w : expected) rest -= w;
  expected.push_back(rest);
  std::sort(expected.begin(), expected.end());

  std::vector<Rational> frozen = {Rational(5) / 56, Rational(3) / 28, Rational(15) / 56,
                                  Rational(15) / 56, Rational(15) / 56};
  CHECK(expected == frozen);
  CHECK(weight_multiset(triangle_distribution(TriangleSide::AuxLeft, p, q, s)) == frozen);
  CHECK(weight_multiset(triangle_distribution(TriangleSide::AuxRight, p, q, s)) == frozen);
}

TEST_CASE("triangle maps agree exactly at the solved crossing weight") {
  std::vector<std::pair<Rational, Rational>> points = {
      {Rational(1) / 4, Rational(1) / 2},
      {Rational(1) / 2, Rational(9) / 10},
      {Rational(2) / 3, Rational(1) / 5},
      {Rational(3) / 7, Rational(3) / 7},
  };
  for (const auto& [p, q] : points) {
    Rational s = solve_s(p, q);
    CHECK(triangle_distribution(TriangleSide::AuxLeft, p, q, s) ==
          triangle_distribution(TriangleSide::AuxRight, p, q, s));
  }
}

TEST_CASE("pointwise check derives a unique crossing weight") {
  auto rep = verify_yang_baxter_at(Rational(1) / 4, Rational(1) / 2);
  CHECK(rep.holds);
  CHECK(rep.details.at("unique_root") == true);
  CHECK(rep.details.at("s") == "5/7");
}

TEST_CASE("symbolic check holds as a polynomial identity") {
  auto rep = verify_yang_baxter_symbolic();
  CHECK(rep.holds);
}

TEST_CASE("aux cells compose multiplicatively") {
  CHECK(verify_aux_composition(Rational(3) / 5, Rational(1) / 3).holds);
  // Signed values exercise the same algebra outside [0, 1].
  CHECK(verify_aux_composition(Rational(2), Rational(1) / 2).holds);
  CHECK(verify_aux_composition(Rational(-1) / 2, Rational(-3)).holds);
}

TEST_CASE("row switch holds symbolically for small widths") {
  for (int L : {2, 4}) {
    auto rep = verify_row_switch(L);
    CHECK(rep.holds);
  }
}

TEST_CASE("row switch holds at fixed biases") {
  auto rep = verify_row_switch_at(4, Rational(1) / 3, Rational(4) / 5);
  CHECK(rep.holds);
}

TEST_CASE("row switch cap") {
  CHECK_THROWS_AS(verify_row_switch(10, 8), resource_limit_error);
}

TEST_CASE("the two stacking orders give the same pattern polynomials") {
  for (int L : {2, 4}) {
    auto top = row_switch_map(L, true);
    auto bottom = row_switch_map(L, false);
    REQUIRE(top.size() == bottom.size());
    for (const auto& [pat, poly] : top) {
      auto it = bottom.find(pat);
      REQUIRE(it != bottom.end());
      // Swapping stacking order swaps the roles of the two biases.
      CHECK(it->second == poly.swapped());
    }
  }
}

// The involution refines the row-switch identity pair by pair: the image has
// the two per-row tile counts exchanged and the same boundary pattern, so
// each term of one side maps to an equal term of the other.
TEST_CASE("involution refines the row switch term by term") {
  for (int L : {2, 4, 6}) {
    long specials = 0;
    for (std::uint64_t top_bits = 0; top_bits < (1u << L); ++top_bits)
      for (std::uint64_t bot_bits = 0; bot_bits < (1u << L); ++bot_bits) {
        RowPair pair;
        for (int i = 0; i < L; ++i) {
          pair.top.tiles.push_back((top_bits >> i) & 1 ? Tile::L : Tile::R);
          pair.bottom.tiles.push_back((bot_bits >> i) & 1 ? Tile::L : Tile::R);
        }
        RowPair image = involute(pair);
        CHECK(count_tiles(image.top, Tile::L) == count_tiles(pair.bottom, Tile::L));
        CHECK(count_tiles(image.bottom, Tile::L) == count_tiles(pair.top, Tile::L));
        CHECK(stack_boundary_pattern(image) == stack_boundary_pattern(pair));
        CHECK(involute(image) == pair);
        if (classify_special(pair) != SpecialPair::None) ++specials;
      }
    CHECK(specials == 2);
  }
}
