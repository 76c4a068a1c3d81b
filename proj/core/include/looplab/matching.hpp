#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace looplab {

// Noncrossing perfect matching of 2n points on a line (equivalently a
// boundary arc diagram).  partner is 0-based internally; every text and
// JSON form is 1-based.
class Matching {
 public:
  // Validates: even size, fixed-point-free involution, noncrossing.
  explicit Matching(std::vector<int> partner);

  int n() const { return static_cast<int>(partner_.size()) / 2; }
  int points() const { return static_cast<int>(partner_.size()); }
  int partner(int i) const { return partner_[i]; }
  const std::vector<int>& partners() const { return partner_; }

  bool operator==(const Matching& o) const { return partner_ == o.partner_; }
  bool operator!=(const Matching& o) const { return partner_ != o.partner_; }
  bool operator<(const Matching& o) const { return partner_ < o.partner_; }

 private:
  std::vector<int> partner_;
};

// Throws structure_error unless partner is a fixed-point-free involution.
void validate_involution(const std::vector<int>& partner);

// Precondition: partner is a fixed-point-free involution (throws otherwise).
// Linear stack scan; noncrossing iff arcs nest.
bool is_noncrossing(const std::vector<int>& partner);

// All of NC_n in lexicographic order of the partner sequence.
// Catalan(n) results; n=0 gives the empty matching.
std::vector<Matching> enumerate_matchings(int n);

// Point i of the result pairs with j iff i-steps pairs with j-steps.
// steps may be any integer; reduced mod 2n.
Matching rotate_matching(const Matching& m, int steps);

// "(1,2),(3,4)" with pairs sorted by smaller endpoint.
std::string format_matching(const Matching& m);

// Accepts the format_matching form, whitespace-tolerant.  Names the
// offending pair on crossing or coverage errors.
Matching parse_matching(const std::string& text);

// {"n": n, "partner": [1-based ints]}
nlohmann::ordered_json matching_to_json(const Matching& m);
Matching matching_from_json(const nlohmann::json& j);

}  // namespace looplab
