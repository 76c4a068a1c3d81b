#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace looplab {

// The two square tiles.  Each carries two arcs between mid-edge ports
// N, E, S, W:
//   L joins N-E and W-S;  R joins W-N and S-E.
// Both diagrams are invariant under rotating the tile by 180 degrees.
// Acting downward on a diagram glued to its top boundary, a row of all-L
// tiles shifts strands one column to the right, all-R one to the left.
enum class Tile : std::uint8_t { L, R };

inline char tile_char(Tile t) { return t == Tile::L ? 'l' : 'r'; }

// One circular row of tiles; tiles[0] is column 1 (leftmost).
struct Row {
  std::vector<Tile> tiles;
  int width() const { return static_cast<int>(tiles.size()); }
  bool operator==(const Row& o) const { return tiles == o.tiles; }
};

// Two rows occupying the same columns, as acted on by the involution.
struct RowPair {
  Row top;
  Row bottom;
  int width() const { return top.width(); }
  bool operator==(const RowPair& o) const { return top == o.top && bottom == o.bottom; }
};

// Text form: one char per column from the left, alphabet {l, r}.
Row parse_row(const std::string& text);
std::string format_row(const Row& row);

// {"top": "rl..", "bottom": "lr.."}
nlohmann::ordered_json row_pair_to_json(const RowPair& pair);
RowPair row_pair_from_json(const nlohmann::json& j);

int count_tiles(const Row& row, Tile kind);

// Shifts every tile `steps` columns to the right (cyclically).
Row rotate_row(const Row& row, int steps);
RowPair rotate_row_pair(const RowPair& pair, int steps);

// Throws dimension_error unless widths are positive, even and equal.
void require_valid_pair(const RowPair& pair);

}  // namespace looplab
