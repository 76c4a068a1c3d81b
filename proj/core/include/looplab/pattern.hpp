#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "looplab/matching.hpp"
#include "looplab/tiles.hpp"

namespace looplab {

// Fixed-point-free involution on m points, 0-based.  Shared by annular
// patterns and the small aux-cell diagrams.
class Pairing {
 public:
  explicit Pairing(std::vector<int> partner);
  int size() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_[i]; }
  const std::vector<int>& partners() const { return partner_; }
  bool operator==(const Pairing& o) const { return partner_ == o.partner_; }
  bool operator!=(const Pairing& o) const { return partner_ != o.partner_; }
  bool operator<(const Pairing& o) const { return partner_ < o.partner_; }

 private:
  std::vector<int> partner_;
};

// Connectivity of the 2L boundary points of a tiled annulus band:
// bottom points are 0..L-1 (below columns 1..L), top points L..2L-1
// (above the same columns).  Only built by tracing tile diagrams or by
// parsing, so realizability is constructive.
struct AnnularPattern {
  int width = 0;
  Pairing pairing;

  bool operator==(const AnnularPattern& o) const {
    return width == o.width && pairing == o.pairing;
  }
  bool operator!=(const AnnularPattern& o) const { return !(*this == o); }
  bool operator<(const AnnularPattern& o) const {
    return width != o.width ? width < o.width : pairing < o.pairing;
  }
};

// Bottom i joined straight up to top i.
AnnularPattern identity_pattern(int width);

// Boundary connectivity of a single circular row.  A lone row never closes
// a loop (every arc touches the boundary).
AnnularPattern row_boundary_pairing(const Row& row);

// Stacks `upper` on top of `lower`, gluing lower's top points to upper's
// bottom points.  Cycles trapped in the glued layer are counted into
// *closed_loops (if given) and dropped.
AnnularPattern compose_patterns(const AnnularPattern& lower, const AnnularPattern& upper,
                                long* closed_loops = nullptr);

// Glues the diagram of m onto the top boundary of `pat` and reads off the
// induced matching of the bottom points.
Matching act_pattern(const AnnularPattern& pat, const Matching& m);

// One row acting downward on a matching drawn above it.
Matching act_row(const Row& row, const Matching& m);

// rows[0] is the bottom of the stack; the top row acts first.
Matching act_stack(const std::vector<Row>& rows, const Matching& m);

// Boundary pattern of the two-row stack (bottom row below top row).
AnnularPattern stack_boundary_pattern(const RowPair& pair);

// Relabels points one column to the right; matches rotate_row on rows.
AnnularPattern rotate_pattern(const AnnularPattern& pat, int steps);

// True when no bottom point is joined to a top point.
bool bottom_closed(const AnnularPattern& pat);

// Bottom-to-bottom connectivity as a matching; requires bottom_closed.
Matching bottom_matching(const AnnularPattern& pat);

// {"width": L, "partner": [1-based ints, bottom 1..L then top L+1..2L]}
nlohmann::ordered_json pattern_to_json(const AnnularPattern& pat);
AnnularPattern pattern_from_json(const nlohmann::json& j);

}  // namespace looplab
