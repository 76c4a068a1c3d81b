#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "looplab/errors.hpp"
#include "looplab/involution.hpp"
#include "looplab/pattern.hpp"
#include "looplab/tiles.hpp"

using namespace looplab;

namespace {

// Builds a definite pair realizing a symbol string: '>' is r over l, '<' is
// l over r, '*' alternates between l/l and r/r for variety.
RowPair pair_from_symbols(const std::string& symbols) {
  RowPair pair;
  const int L = static_cast<int>(symbols.size());
  pair.top.tiles.resize(L);
  pair.bottom.tiles.resize(L);
  for (int i = 0; i < L; ++i) {
    switch (symbols[i]) {
      case '>':
        pair.top.tiles[i] = Tile::R;
        pair.bottom.tiles[i] = Tile::L;
        break;
      case '<':
        pair.top.tiles[i] = Tile::L;
        pair.bottom.tiles[i] = Tile::R;
        break;
      default:
        pair.top.tiles[i] = pair.bottom.tiles[i] = (i % 2 ? Tile::R : Tile::L);
        break;
    }
  }
  return pair;
}

RowPair pair_from_bits(int width, unsigned long bits) {
  RowPair pair;
  pair.top.tiles.resize(width);
  pair.bottom.tiles.resize(width);
  for (int c = 0; c < width; ++c) {
    pair.top.tiles[c] = (bits >> c) & 1 ? Tile::L : Tile::R;
    pair.bottom.tiles[c] = (bits >> (width + c)) & 1 ? Tile::L : Tile::R;
  }
  return pair;
}

struct OracleBlock {
  int a, b, j, k;
};

// Literal encoding of the three circular-string rules: a column is in some
// block iff it is an arrow or a star next to the pointing side of one, a
// column right of '>' shares its block, and a column left of '<' shares its
// block.  Blocks are the components of that sharing relation; j and k are
// read off the component text.
std::vector<OracleBlock> oracle_blocks(const std::string& s) {
  const int L = static_cast<int>(s.size());
  std::vector<bool> marked(L, false);
  for (int i = 0; i < L; ++i)
    marked[i] = s[i] != '*' || s[(i + 1) % L] == '<' || s[(i + L - 1) % L] == '>';
  auto shared = [&](int i) {  // column i+1 belongs with column i
    return s[i] == '>' || s[(i + 1) % L] == '<';
  };
  std::vector<OracleBlock> blocks;
  std::vector<bool> seen(L, false);
  for (int start = 0; start < L; ++start) {
    if (!marked[start] || seen[start] || shared((start + L - 1) % L)) continue;
    int len = 1;
    while (len < L && shared((start + len - 1) % L)) ++len;
    REQUIRE(len >= 2);  // every covered column has a companion
    std::string text;
    for (int t = 0; t < len; ++t) {
      seen[(start + t) % L] = true;
      text += s[(start + t) % L];
    }
    REQUIRE(text.front() != '<');
    REQUIRE(text.back() != '>');
    int j = 0;
    while (text[j] == '>') ++j;
    for (int t = j + 1; t < len; ++t) REQUIRE(text[t] == '<');
    blocks.push_back({start, (start + len - 1) % L, j, len - 1 - j});
  }
  // A component closing the full circle only happens for the two special
  // pairs, which have no decomposition; callers skip those.
  return blocks;
}

std::string blocks_text(const std::vector<FundamentalBlock>& blocks) {
  std::string out;
  for (const auto& b : blocks)
    out += "[" + std::to_string(b.interval.a + 1) + "," + std::to_string(b.interval.b + 1) +
           "]j" + std::to_string(b.j) + "k" + std::to_string(b.k) + " ";
  return out;
}

const char* kPaperSymbols = "**>>><**>**>>*<<*<***<>*";

}  // namespace

TEST_CASE("column symbols from tile combinations") {
  CHECK(column_symbol(Tile::R, Tile::L) == ColumnSymbol::Right);
  CHECK(column_symbol(Tile::L, Tile::R) == ColumnSymbol::Left);
  CHECK(column_symbol(Tile::L, Tile::L) == ColumnSymbol::Star);
  CHECK(column_symbol(Tile::R, Tile::R) == ColumnSymbol::Star);
  CHECK(symbol_char(ColumnSymbol::Right) == '>');
  CHECK(symbol_char(ColumnSymbol::Left) == '<');
  CHECK(symbol_char(ColumnSymbol::Star) == '*');
}

TEST_CASE("symbol string reads column by column") {
  RowPair pair{parse_row("rlrr"), parse_row("lrrl")};
  CHECK(symbol_string(pair) == "><*>");
}

TEST_CASE("special pair classification") {
  CHECK(classify_special({parse_row("rr"), parse_row("ll")}) == SpecialPair::AllRight);
  CHECK(classify_special({parse_row("ll"), parse_row("rr")}) == SpecialPair::AllLeft);
  CHECK(classify_special({parse_row("rl"), parse_row("ll")}) == SpecialPair::None);
  CHECK(classify_special({parse_row("rr"), parse_row("rr")}) == SpecialPair::None);
}

TEST_CASE("special pairs have no block decomposition") {
  CHECK_THROWS_AS(maximal_fundamental_blocks({parse_row("rrrr"), parse_row("llll")}),
                  special_pair_error);
  CHECK_THROWS_AS(maximal_fundamental_blocks({parse_row("ll"), parse_row("rr")}),
                  special_pair_error);
}

TEST_CASE("the involution swaps the two special pairs") {
  RowPair all_right{parse_row("rrrr"), parse_row("llll")};
  RowPair all_left{parse_row("llll"), parse_row("rrrr")};
  CHECK(involute(all_right) == all_left);
  CHECK(involute(all_left) == all_right);
}

TEST_CASE("small frozen block decompositions") {
  // One glued run of two columns takes the right-arrow as its prefix.
  auto b1 = maximal_fundamental_blocks(pair_from_symbols("><"));
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].interval == CircularInterval{0, 1, 2});
  CHECK(b1[0].j == 1);
  CHECK(b1[0].k == 0);

  // Star counts as middle when a left-arrow follows.
  auto b2 = maximal_fundamental_blocks(pair_from_symbols("*<**"));
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].interval == CircularInterval{0, 1, 4});
  CHECK(b2[0].j == 0);
  CHECK(b2[0].k == 1);

  // Whole-cycle block: every column is in one interval.
  auto b3 = maximal_fundamental_blocks(pair_from_symbols(">><<"));
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].interval == CircularInterval{0, 3, 4});
  CHECK(b3[0].j == 2);
  CHECK(b3[0].k == 1);

  // A block may wrap the seam.
  auto b4 = maximal_fundamental_blocks(pair_from_symbols("<**>"));
  REQUIRE(b4.size() == 1);
  CHECK(b4[0].interval == CircularInterval{3, 0, 4});
  CHECK(b4[0].j == 1);
  CHECK(b4[0].k == 0);

  // Adjacent arrows pointing apart split into two blocks.
  auto b5 = maximal_fundamental_blocks(pair_from_symbols("><><"));
  REQUIRE(b5.size() == 2);
  CHECK(b5[0].interval == CircularInterval{0, 1, 4});
  CHECK(b5[1].interval == CircularInterval{2, 3, 4});
}

TEST_CASE("the 24-column worked example decomposes into six blocks") {
  RowPair pair = pair_from_symbols(kPaperSymbols);
  REQUIRE(symbol_string(pair) == kPaperSymbols);
  auto blocks = maximal_fundamental_blocks(pair);
  REQUIRE(blocks.size() == 6);
  const int expected[6][2] = {{3, 6}, {9, 10}, {12, 16}, {17, 18}, {21, 22}, {23, 24}};
  for (int i = 0; i < 6; ++i) {
    CHECK(blocks[i].interval.a + 1 == expected[i][0]);
    CHECK(blocks[i].interval.b + 1 == expected[i][1]);
  }
  auto j = blocks_to_json(blocks);
  REQUIRE(j.size() == 6);
  CHECK(j[0]["a"] == 3);
  CHECK(j[0]["b"] == 6);
  CHECK(j[2]["a"] == 12);
  CHECK(j[2]["b"] == 16);
}

TEST_CASE("block detector equals the literal mark-and-cut oracle, exhaustively") {
  for (int L : {2, 4, 6, 8}) {
    for (unsigned long bits = 0; bits < (1ul << (2 * L)); ++bits) {
      RowPair pair = pair_from_bits(L, bits);
      if (classify_special(pair) != SpecialPair::None) continue;
      auto expected = oracle_blocks(symbol_string(pair));
      auto got = maximal_fundamental_blocks(pair);
      auto key = [](const OracleBlock& x) { return std::make_pair(x.a, x.b); };
      std::sort(expected.begin(), expected.end(),
                [&](const OracleBlock& x, const OracleBlock& y) { return key(x) < key(y); });
      REQUIRE(got.size() == expected.size());
      REQUIRE(std::is_sorted(got.begin(), got.end(),
                             [](const FundamentalBlock& x, const FundamentalBlock& y) {
                               return x.interval.a < y.interval.a;
                             }));
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].interval.a == expected[i].a);
        CHECK(got[i].interval.b == expected[i].b);
        CHECK(got[i].j == expected[i].j);
        CHECK(got[i].k == expected[i].k);
      }
    }
  }
}

TEST_CASE("block rotation reverses and swaps the rows inside the interval") {
  RowPair pair{parse_row("rl"), parse_row("ll")};  // symbols >*
  auto blocks = maximal_fundamental_blocks(pair);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].interval == CircularInterval{0, 1, 2});
  RowPair rotated = block_rotate(pair, blocks[0].interval);
  CHECK(format_row(rotated.top) == "ll");
  CHECK(format_row(rotated.bottom) == "lr");
  CHECK(block_rotate(rotated, blocks[0].interval) == pair);
}

TEST_CASE("block rotation across the seam") {
  RowPair pair = pair_from_symbols("<**>");  // block [3, 0]
  auto blocks = maximal_fundamental_blocks(pair);
  REQUIRE(blocks.size() == 1);
  RowPair rotated = block_rotate(pair, blocks[0].interval);
  // Columns 3 and 0 swap-and-reverse; columns 1 and 2 stay put.
  CHECK(rotated.top.tiles[1] == pair.top.tiles[1]);
  CHECK(rotated.top.tiles[2] == pair.top.tiles[2]);
  CHECK(rotated.top.tiles[3] == pair.bottom.tiles[0]);
  CHECK(rotated.top.tiles[0] == pair.bottom.tiles[3]);
  CHECK(rotated.bottom.tiles[3] == pair.top.tiles[0]);
  CHECK(rotated.bottom.tiles[0] == pair.top.tiles[3]);
  CHECK(block_rotate(rotated, blocks[0].interval) == pair);
}

TEST_CASE("rotations of disjoint blocks commute") {
  RowPair pair = pair_from_symbols("><*><*");
  auto blocks = maximal_fundamental_blocks(pair);
  REQUIRE(blocks.size() == 2);
  auto ab = block_rotate(block_rotate(pair, blocks[0].interval), blocks[1].interval);
  auto ba = block_rotate(block_rotate(pair, blocks[1].interval), blocks[0].interval);
  CHECK(ab == ba);
}

TEST_CASE("frozen involution of the width-2 example") {
  RowPair pair{parse_row("rl"), parse_row("ll")};
  RowPair v = involute(pair);
  CHECK(format_row(v.top) == "ll");
  CHECK(format_row(v.bottom) == "lr");
  CHECK(involute(v) == pair);
}

TEST_CASE("involution fixes all-star pairs") {
  RowPair pair{parse_row("rr"), parse_row("rr")};
  CHECK(involute(pair) == pair);
  CHECK(maximal_fundamental_blocks(pair).empty());
}

TEST_CASE("involution core properties on a few explicit pairs") {
  for (const char* symbols : {"><", ">><<", "<**>", "**>>><**>**>>*<<*<***<>*"}) {
    RowPair pair = pair_from_symbols(symbols);
    RowPair v = involute(pair);
    CHECK(involute(v) == pair);
    CHECK(stack_boundary_pattern(v) == stack_boundary_pattern(pair));
    CHECK(count_tiles(v.top, Tile::L) == count_tiles(pair.bottom, Tile::L));
    CHECK(count_tiles(v.bottom, Tile::L) == count_tiles(pair.top, Tile::L));
    RowPair rotated_then_v = involute(rotate_row_pair(pair, 1));
    RowPair v_then_rotated = rotate_row_pair(v, 1);
    CHECK(rotated_then_v == v_then_rotated);
  }
}

TEST_CASE("interval containment respects wrapping") {
  CircularInterval iv{5, 1, 6};
  CHECK(iv.length() == 3);
  CHECK(iv.contains(5));
  CHECK(iv.contains(0));
  CHECK(iv.contains(1));
  CHECK_FALSE(iv.contains(2));
  CHECK_FALSE(iv.contains(4));
}

TEST_CASE("block_rotate validates the interval") {
  RowPair pair{parse_row("rl"), parse_row("ll")};
  CHECK_THROWS_AS(block_rotate(pair, CircularInterval{0, 1, 4}), dimension_error);
}

TEST_CASE("blocks serialize with 1-based endpoints") {
  auto blocks = maximal_fundamental_blocks(pair_from_symbols("><"));
  auto j = blocks_to_json(blocks);
  CHECK(j[0]["a"] == 1);
  CHECK(j[0]["b"] == 2);
  CHECK(j[0]["j"] == 1);
  CHECK(j[0]["k"] == 0);
  CHECK(blocks_text(blocks) == "[1,2]j1k0 ");
}
