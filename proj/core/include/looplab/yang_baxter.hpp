#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>

#include "looplab/pattern.hpp"
#include "looplab/poly.hpp"
#include "looplab/rational.hpp"

namespace looplab {

// Full-height 1x2 cell with two ports per side.  Pass joins each left port
// to the right port at the same height; Reflect joins the two left ports
// and the two right ports.  Pass carries the cell's weight parameter, so
// composing two cells multiplies their parameters.
enum class AuxState : std::uint8_t { Pass, Reflect };

// Ports ordered LT, LB, RT, RB (0..3).
Pairing aux_pairing(AuxState state);

// Which side of the tile column the aux cell sits on.  AuxLeft puts the
// p-tile on top of the q-tile; AuxRight mirrors the cell to the right with
// the q-tile on top.  Outer boundary points are numbered
//   0 = right-bottom, 1 = right-top, 2 = top, 3 = left-top,
//   4 = left-bottom, 5 = bottom.
enum class TriangleSide : std::uint8_t { AuxLeft, AuxRight };

// Distribution over 6-point pairings of the aux cell next to a biased
// column of two tiles.  Signed parameters are allowed.
std::map<Pairing, Rational> triangle_distribution(TriangleSide side, const Rational& p,
                                                  const Rational& q, const Rational& s);

// The crossing weight making both sides agree: (1-q+pq)/(1-p+pq).
// Throws singular_parameter_error when the denominator vanishes.
Rational solve_s(const Rational& p, const Rational& q);

struct CheckReport {
  std::string claim;
  bool holds = false;
  nlohmann::ordered_json details;
};

// At fixed (p, q): derives the unique s making the two triangle maps equal
// (weights are affine in s), checks it matches solve_s, and that the full
// maps coincide there.
CheckReport verify_yang_baxter_at(const Rational& p, const Rational& q);

// Same equality as exact polynomials in (p, q): substitute s = solve_s and
// clear its denominator 1-p+pq, staying in polynomial arithmetic.
CheckReport verify_yang_baxter_symbolic();

// Two aux cells side by side match one aux cell with parameter s*t,
// including signed values.
CheckReport verify_aux_composition(const Rational& s, const Rational& t);

// Distribution of boundary patterns of a p-biased row stacked on a
// q-biased row, as exact bivariate polynomials keyed by pattern.
std::map<AnnularPattern, PolyBi> row_switch_map(int L, bool p_on_top, int max_L = 8);

// The two stacking orders give identical pattern maps (polynomially in
// p, q), plus the pointwise refinement: the involution carries each pair to
// one of equal swapped-bias weight and equal pattern.
CheckReport verify_row_switch(int L, int max_L = 8);

// Pointwise variant at fixed biases.
CheckReport verify_row_switch_at(int L, const Rational& p, const Rational& q,
                                 int max_L = 8);

}  // namespace looplab
