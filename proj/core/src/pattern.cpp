#include "looplab/pattern.hpp"

#include "looplab/errors.hpp"

namespace looplab {

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
  validate_involution(partner_);
}

AnnularPattern identity_pattern(int width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  std::vector<int> partner(2 * width);
  for (int i = 0; i < width; ++i) {
    partner[i] = width + i;
    partner[width + i] = i;
  }
  return AnnularPattern{width, Pairing(std::move(partner))};
}

AnnularPattern row_boundary_pairing(const Row& row) {
  const int w = row.width();
  if (w <= 0) throw dimension_error("empty row");
  // Every tile arc joins one boundary port to one vertical mid-edge, and the
  // mid-edge between columns j and j+1 is touched by exactly those two tiles,
  // so the pairing falls out column by column.  Bottom port of column c is
  // point c, top port is point w + c.
  std::vector<int> partner(2 * w, -1);
  for (int j = 0; j < w; ++j) {
    int east = row.tiles[j] == Tile::L ? w + j : j;
    int jn = (j + 1) % w;
    int west = row.tiles[jn] == Tile::L ? jn : w + jn;
    partner[east] = west;
    partner[west] = east;
  }
  return AnnularPattern{w, Pairing(std::move(partner))};
}

AnnularPattern compose_patterns(const AnnularPattern& lower, const AnnularPattern& upper,
                                long* closed_loops) {
  const int w = lower.width;
  if (upper.width != w) throw dimension_error("stacked patterns must share width");
  // Seam point c is lower top w+c glued to upper bottom c.
  std::vector<int> partner(2 * w, -1);
  std::vector<char> seen(w, 0);

  auto trace = [&](int start, int from_bottom) {
    // Walks across the seam until it exits at an outer boundary point.
    // from_bottom: start is a lower-bottom point; else the column of an
    // upper-top point.  in_lower tracks which pattern x currently lives in.
    bool in_lower = from_bottom != 0;
    int x = from_bottom ? lower.pairing.partner(start)
                        : upper.pairing.partner(start + w);
    while (true) {
      if (in_lower) {
        if (x < w) return x;           // lower bottom
        seen[x - w] = 1;
        x = upper.pairing.partner(x - w);
        in_lower = false;
      } else {
        if (x >= w) return w + (x - w);  // upper top
        seen[x] = 1;
        x = lower.pairing.partner(w + x);
        in_lower = true;
      }
    }
  };

  for (int i = 0; i < w; ++i) {
    if (partner[i] >= 0) continue;
    int end = trace(i, 1);
    partner[i] = end;
    partner[end] = i;
  }
  for (int c = 0; c < w; ++c) {
    int outer = w + c;
    if (partner[outer] >= 0) continue;
    int end = trace(c, 0);
    partner[outer] = end;
    partner[end] = outer;
  }

  if (closed_loops) {
    // Remaining seam cycles never touched an outer point.
    long loops = 0;
    for (int c = 0; c < w; ++c) {
      if (seen[c]) continue;
      ++loops;
      int x = c;
      while (!seen[x]) {
        seen[x] = 1;
        int up = upper.pairing.partner(x);
        if (up >= w) throw structure_error("seam cycle escaped");  // unreachable
        int low = lower.pairing.partner(w + up);
        if (low < w) throw structure_error("seam cycle escaped");  // unreachable
        seen[up] = 1;
        x = low - w;
      }
    }
    *closed_loops += loops;
  }
  return AnnularPattern{w, Pairing(std::move(partner))};
}

Matching act_pattern(const AnnularPattern& pat, const Matching& m) {
  const int w = pat.width;
  if (m.points() != w)
    throw dimension_error("matching has " + std::to_string(m.points()) +
                          " points, pattern width is " + std::to_string(w));
  std::vector<int> out(w, -1);
  for (int i = 0; i < w; ++i) {
    if (out[i] >= 0) continue;
    int x = pat.pairing.partner(i);
    while (x >= w) x = pat.pairing.partner(w + m.partner(x - w));
    out[i] = x;
    out[x] = i;
  }
  return Matching(std::move(out));
}

Matching act_row(const Row& row, const Matching& m) {
  return act_pattern(row_boundary_pairing(row), m);
}

Matching act_stack(const std::vector<Row>& rows, const Matching& m) {
  Matching cur = m;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) cur = act_row(*it, cur);
  return cur;
}

AnnularPattern stack_boundary_pattern(const RowPair& pair) {
  require_valid_pair(pair);
  return compose_patterns(row_boundary_pairing(pair.bottom),
                          row_boundary_pairing(pair.top));
}

AnnularPattern rotate_pattern(const AnnularPattern& pat, int steps) {
  const int w = pat.width;
  int s = ((steps % w) + w) % w;
  auto shift = [&](int x) {
    return x < w ? (x + s) % w : w + (x - w + s) % w;
  };
  std::vector<int> partner(2 * w);
  for (int x = 0; x < 2 * w; ++x) partner[shift(x)] = shift(pat.pairing.partner(x));
  return AnnularPattern{w, Pairing(std::move(partner))};
}

bool bottom_closed(const AnnularPattern& pat) {
  for (int i = 0; i < pat.width; ++i)
    if (pat.pairing.partner(i) >= pat.width) return false;
  return true;
}

Matching bottom_matching(const AnnularPattern& pat) {
  if (!bottom_closed(pat)) throw structure_error("pattern still joins bottom to top");
  std::vector<int> partner(pat.width);
  for (int i = 0; i < pat.width; ++i) partner[i] = pat.pairing.partner(i);
  return Matching(std::move(partner));
}

nlohmann::ordered_json pattern_to_json(const AnnularPattern& pat) {
  std::vector<int> one_based(2 * pat.width);
  for (int i = 0; i < 2 * pat.width; ++i) one_based[i] = pat.pairing.partner(i) + 1;
  return nlohmann::ordered_json{{"width", pat.width}, {"partner", one_based}};
}

AnnularPattern pattern_from_json(const nlohmann::json& j) {
  int width = j.at("width").get<int>();
  std::vector<int> partner = j.at("partner").get<std::vector<int>>();
  if (static_cast<int>(partner.size()) != 2 * width)
    throw dimension_error("partner length must be 2*width");
  for (int& v : partner) --v;
  return AnnularPattern{width, Pairing(std::move(partner))};
}

}  // namespace looplab
