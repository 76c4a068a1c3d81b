#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "looplab/tiles.hpp"

namespace looplab {

// Column of a row pair read top-over-bottom:
//   Left  = l over r,  Right = r over l,  Star = equal tiles.
enum class ColumnSymbol : std::uint8_t { Left, Right, Star };

inline char symbol_char(ColumnSymbol s) {
  return s == ColumnSymbol::Left ? '<' : s == ColumnSymbol::Right ? '>' : '*';
}

ColumnSymbol column_symbol(Tile top, Tile bottom);
std::vector<ColumnSymbol> column_symbols(const RowPair& pair);
std::string symbol_string(const RowPair& pair);

enum class SpecialPair : std::uint8_t { None, AllRight, AllLeft };
SpecialPair classify_special(const RowPair& pair);

// Circular column interval [a, b] (inclusive, 0-based, may wrap).
struct CircularInterval {
  int a = 0;
  int b = 0;
  int width = 0;
  int length() const { return (b - a + width) % width + 1; }
  bool contains(int pos) const { return (pos - a + width) % width < length(); }
  bool operator==(const CircularInterval& o) const {
    return a == o.a && b == o.b && width == o.width;
  }
};

// A maximal interval whose columns read Right^j, one middle column, Left^k
// (j + k >= 1).  middle_top/middle_bottom are the tiles of the middle column.
struct FundamentalBlock {
  CircularInterval interval;
  int j = 0;
  int k = 0;
  Tile middle_top = Tile::L;
  Tile middle_bottom = Tile::L;
};

// Decomposition of a non-special pair into its maximal blocks, sorted by
// start column; disjoint and unique.  Two adjacent columns belong to the
// same block exactly when the left one reads Right or the right one reads
// Left, so blocks are the nontrivial runs glued by that relation.
// Throws special_pair_error on all-Right / all-Left pairs.
std::vector<FundamentalBlock> maximal_fundamental_blocks(const RowPair& pair);

// Turns the sub-band over the interval upside down: inside the interval the
// new top row is the reversed old bottom row and vice versa.  Both tiles are
// 180-degree symmetric, so this is a plain swap-and-reverse of the letters.
RowPair block_rotate(const RowPair& pair, const CircularInterval& interval);

// Rotates every maximal block (special pairs map to each other).  A pattern
// preserving involution that swaps the per-row tile counts.
RowPair involute(const RowPair& pair);

// [{"a":..,"b":..,"j":..,"k":..,"middle":"xy"}], 1-based columns, middle
// given as top then bottom letter.
nlohmann::ordered_json blocks_to_json(const std::vector<FundamentalBlock>& blocks);

}  // namespace looplab
