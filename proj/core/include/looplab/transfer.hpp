#pragma once

#include <nlohmann/json.hpp>

#include <vector>

#include "looplab/matching.hpp"
#include "looplab/poly.hpp"

namespace looplab {

inline constexpr int kDefaultTransferBound = 6;

// Row-to-row transition weights of one biased tile row, as exact
// polynomials in the bias p.  order is enumerate_matchings(n); entry
// [from][to] sums p^(#l tiles) (1-p)^(#r tiles) over the rows mapping
// `from` to `to`.  Every row of the matrix sums to the constant 1.
struct TransferMatrix {
  int n = 0;
  std::vector<Matching> order;
  std::vector<std::vector<PolyUni>> entries;
};

// max_n caps the cost (Catalan(n) squared entries); raise it explicitly for
// bigger runs.  Throws resource_limit_error past the cap.
TransferMatrix build_transfer_matrix(int n, int max_n = kDefaultTransferBound);

std::vector<std::vector<Rational>> evaluate_transfer(const TransferMatrix& T,
                                                     const Rational& p);

struct CommutatorReport {
  int n = 0;
  bool zero = false;
  // Largest |coefficient| in T(p)T(q) - T(q)T(p); zero iff `zero`.
  Rational max_abs_coeff;
  int defect_row = -1;
  int defect_col = -1;
};

// Forms both products with independent variables and compares entrywise.
// inject_defect perturbs one entry of one product by the monomial pq first
// (a self-test that the comparison can fail).
CommutatorReport commutator_report(const TransferMatrix& T, bool inject_defect = false);

// Cross-check at rational points: T(p)T(q) == T(q)T(p) for all given p, q.
bool commutator_pointwise_zero(const TransferMatrix& T, const std::vector<Rational>& ps,
                               const std::vector<Rational>& qs);

// Unique probability vector fixed by the chain, solved exactly.  Throws
// degenerate_chain_error for p in {0,1} or if the fixed space is not a line.
std::vector<Rational> stationary_distribution(int n, const Rational& p,
                                              int max_n = kDefaultTransferBound);

// {"n":.., "order":[matching strings], "entries":[[[coeff strings asc]]]}
nlohmann::ordered_json transfer_to_json(const TransferMatrix& T);

}  // namespace looplab
