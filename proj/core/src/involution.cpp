#include "looplab/involution.hpp"

#include <algorithm>

#include "looplab/errors.hpp"

namespace looplab {

ColumnSymbol column_symbol(Tile top, Tile bottom) {
  if (top == bottom) return ColumnSymbol::Star;
  return top == Tile::L ? ColumnSymbol::Left : ColumnSymbol::Right;
}

std::vector<ColumnSymbol> column_symbols(const RowPair& pair) {
  require_valid_pair(pair);
  std::vector<ColumnSymbol> s(pair.width());
  for (int i = 0; i < pair.width(); ++i)
    s[i] = column_symbol(pair.top.tiles[i], pair.bottom.tiles[i]);
  return s;
}

std::string symbol_string(const RowPair& pair) {
  std::string out;
  for (ColumnSymbol s : column_symbols(pair)) out += symbol_char(s);
  return out;
}

SpecialPair classify_special(const RowPair& pair) {
  auto s = column_symbols(pair);
  if (std::all_of(s.begin(), s.end(), [](ColumnSymbol c) { return c == ColumnSymbol::Right; }))
    return SpecialPair::AllRight;
  if (std::all_of(s.begin(), s.end(), [](ColumnSymbol c) { return c == ColumnSymbol::Left; }))
    return SpecialPair::AllLeft;
  return SpecialPair::None;
}

std::vector<FundamentalBlock> maximal_fundamental_blocks(const RowPair& pair) {
  const auto s = column_symbols(pair);
  const int L = static_cast<int>(s.size());
  if (classify_special(pair) != SpecialPair::None)
    throw special_pair_error("all-right / all-left pair has no block decomposition; "
                             "the involution swaps it with its mirror directly");

  // glued(i): columns i and i+1 lie in the same block.
  auto glued = [&](int i) {
    return s[i] == ColumnSymbol::Right || s[(i + 1) % L] == ColumnSymbol::Left;
  };
  int first_cut = -1;
  for (int i = 0; i < L; ++i)
    if (!glued(i)) { first_cut = i; break; }
  // A fully glued circle would have to be all-right or all-left.
  if (first_cut < 0) throw structure_error("glued circle on a non-special pair");

  std::vector<FundamentalBlock> blocks;
  int pos = (first_cut + 1) % L;
  for (int covered = 0; covered < L;) {
    int start = pos;
    int len = 1;
    while (glued((start + len - 1) % L)) ++len;
    pos = (start + len) % L;
    covered += len;

    if (len == 1) {
      if (s[start] != ColumnSymbol::Star)
        throw structure_error("isolated non-star column");  // unreachable
      continue;
    }
    FundamentalBlock b;
    b.interval = CircularInterval{start, (start + len - 1) % L, L};
    int t = 0;
    while (t < len && s[(start + t) % L] == ColumnSymbol::Right) ++t;
    b.j = t;
    if (t >= len) throw structure_error("block without middle column");  // unreachable
    int mid = (start + t) % L;
    b.middle_top = pair.top.tiles[mid];
    b.middle_bottom = pair.bottom.tiles[mid];
    b.k = len - t - 1;
    for (int u = t + 1; u < len; ++u)
      if (s[(start + u) % L] != ColumnSymbol::Left)
        throw structure_error("block tail is not all left");  // unreachable
    blocks.push_back(b);
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const FundamentalBlock& x, const FundamentalBlock& y) {
              return x.interval.a < y.interval.a;
            });
  return blocks;
}

RowPair block_rotate(const RowPair& pair, const CircularInterval& interval) {
  require_valid_pair(pair);
  const int L = pair.width();
  if (interval.width != L || interval.a < 0 || interval.a >= L || interval.b < 0 ||
      interval.b >= L)
    throw dimension_error("interval does not fit the pair");
  const int len = interval.length();
  RowPair out = pair;
  for (int t = 0; t < len; ++t) {
    int dst = (interval.a + t) % L;
    int src = (interval.a + len - 1 - t) % L;
    out.top.tiles[dst] = pair.bottom.tiles[src];
    out.bottom.tiles[dst] = pair.top.tiles[src];
  }
  return out;
}

RowPair involute(const RowPair& pair) {
  switch (classify_special(pair)) {
    case SpecialPair::AllRight:
    case SpecialPair::AllLeft:
      // r-over-l columns everywhere <-> l-over-r columns everywhere.
      return RowPair{pair.bottom, pair.top};
    case SpecialPair::None:
      break;
  }
  RowPair out = pair;
  for (const auto& b : maximal_fundamental_blocks(pair))
    out = block_rotate(out, b.interval);
  return out;
}

nlohmann::ordered_json blocks_to_json(const std::vector<FundamentalBlock>& blocks) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& b : blocks) {
    arr.push_back(nlohmann::ordered_json{
        {"a", b.interval.a + 1},
        {"b", b.interval.b + 1},
        {"j", b.j},
        {"k", b.k},
        {"middle", std::string{tile_char(b.middle_top), tile_char(b.middle_bottom)}},
    });
  }
  return arr;
}

}  // namespace looplab
