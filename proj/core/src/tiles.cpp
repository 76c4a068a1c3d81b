#include "looplab/tiles.hpp"

#include "looplab/errors.hpp"

namespace looplab {

Row parse_row(const std::string& text) {
  Row row;
  row.tiles.reserve(text.size());
  for (char c : text) {
    if (c == 'l') row.tiles.push_back(Tile::L);
    else if (c == 'r') row.tiles.push_back(Tile::R);
    else throw std::invalid_argument(std::string("bad tile character '") + c +
                                     "' (expected 'l' or 'r')");
  }
  if (row.tiles.empty()) throw std::invalid_argument("empty row");
  return row;
}

std::string format_row(const Row& row) {
  std::string s;
  s.reserve(row.tiles.size());
  for (Tile t : row.tiles) s += tile_char(t);
  return s;
}

nlohmann::ordered_json row_pair_to_json(const RowPair& pair) {
  return nlohmann::ordered_json{{"top", format_row(pair.top)},
                                {"bottom", format_row(pair.bottom)}};
}

RowPair row_pair_from_json(const nlohmann::json& j) {
  RowPair pair{parse_row(j.at("top").get<std::string>()),
               parse_row(j.at("bottom").get<std::string>())};
  require_valid_pair(pair);
  return pair;
}

int count_tiles(const Row& row, Tile kind) {
  int c = 0;
  for (Tile t : row.tiles)
    if (t == kind) ++c;
  return c;
}

Row rotate_row(const Row& row, int steps) {
  const int w = row.width();
  int s = ((steps % w) + w) % w;
  Row out;
  out.tiles.resize(w);
  for (int i = 0; i < w; ++i) out.tiles[(i + s) % w] = row.tiles[i];
  return out;
}

RowPair rotate_row_pair(const RowPair& pair, int steps) {
  return RowPair{rotate_row(pair.top, steps), rotate_row(pair.bottom, steps)};
}

void require_valid_pair(const RowPair& pair) {
  if (pair.top.width() != pair.bottom.width())
    throw dimension_error("row widths differ");
  if (pair.top.width() <= 0 || pair.top.width() % 2 != 0)
    throw dimension_error("row width must be positive and even");
}

}  // namespace looplab
