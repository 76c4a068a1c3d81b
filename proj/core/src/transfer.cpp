#include "looplab/transfer.hpp"

#include <map>

#include "looplab/errors.hpp"
#include "looplab/pattern.hpp"

namespace looplab {

TransferMatrix build_transfer_matrix(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > max_n)
    throw resource_limit_error("n=" + std::to_string(n) + " above the bound " +
                               std::to_string(max_n) + "; raise max_n to proceed");
  TransferMatrix T;
  T.n = n;
  T.order = enumerate_matchings(n);
  const int C = static_cast<int>(T.order.size());
  const int L = 2 * n;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < C; ++i) index.emplace(T.order[i].partners(), i);

  std::vector<PolyUni> weight_by_lcount(L + 1);
  for (int a = 0; a <= L; ++a) weight_by_lcount[a] = bias_weight_poly(a, L - a);

  T.entries.assign(C, std::vector<PolyUni>(C));
  Row row;
  row.tiles.assign(L, Tile::R);
  for (unsigned long mask = 0; mask < (1ul << L); ++mask) {
    int lcount = 0;
    for (int c = 0; c < L; ++c) {
      bool is_l = (mask >> c) & 1u;
      row.tiles[c] = is_l ? Tile::L : Tile::R;
      lcount += is_l;
    }
    AnnularPattern pat = row_boundary_pairing(row);
    for (int i = 0; i < C; ++i) {
      int j = index.at(act_pattern(pat, T.order[i]).partners());
      T.entries[i][j] += weight_by_lcount[lcount];
    }
  }

  // Each matrix row enumerates all tile rows once, so it must sum to 1.
  const PolyUni one(Rational(1));
  for (int i = 0; i < C; ++i) {
    PolyUni sum;
    for (int j = 0; j < C; ++j) sum += T.entries[i][j];
    if (sum != one) throw structure_error("transfer row does not sum to one");
  }
  return T;
}

std::vector<std::vector<Rational>> evaluate_transfer(const TransferMatrix& T,
                                                     const Rational& p) {
  const int C = static_cast<int>(T.order.size());
  std::vector<std::vector<Rational>> M(C, std::vector<Rational>(C));
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) M[i][j] = T.entries[i][j].eval(p);
  return M;
}

CommutatorReport commutator_report(const TransferMatrix& T, bool inject_defect) {
  const int C = static_cast<int>(T.order.size());
  CommutatorReport rep;
  rep.n = T.n;
  std::vector<std::vector<PolyBi>> diff(C, std::vector<PolyBi>(C));
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) {
      PolyBi acc;
      for (int k = 0; k < C; ++k) {
        acc += PolyBi::outer(T.entries[i][k], T.entries[k][j]);  // T(p)T(q)
        acc -= PolyBi::outer(T.entries[k][j], T.entries[i][k]);  // T(q)T(p)
      }
      diff[i][j] = std::move(acc);
    }
  if (inject_defect)
    diff[0][0] += PolyBi::outer(PolyUni::monomial(1, Rational(1)),
                                PolyUni::monomial(1, Rational(1)));
  rep.zero = true;
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) {
      if (diff[i][j].is_zero()) continue;
      if (rep.zero) {
        rep.defect_row = i;
        rep.defect_col = j;
      }
      rep.zero = false;
      Rational a = diff[i][j].max_abs_coeff();
      if (a > rep.max_abs_coeff) rep.max_abs_coeff = a;
    }
  return rep;
}

bool commutator_pointwise_zero(const TransferMatrix& T, const std::vector<Rational>& ps,
                               const std::vector<Rational>& qs) {
  const int C = static_cast<int>(T.order.size());
  auto mul = [C](const auto& A, const auto& B) {
    std::vector<std::vector<Rational>> M(C, std::vector<Rational>(C, Rational(0)));
    for (int i = 0; i < C; ++i)
      for (int k = 0; k < C; ++k) {
        if (A[i][k] == 0) continue;
        for (int j = 0; j < C; ++j) M[i][j] += A[i][k] * B[k][j];
      }
    return M;
  };
  for (const Rational& p : ps) {
    auto A = evaluate_transfer(T, p);
    for (const Rational& q : qs) {
      auto B = evaluate_transfer(T, q);
      if (mul(A, B) != mul(B, A)) return false;
    }
  }
  return true;
}

std::vector<Rational> stationary_distribution(int n, const Rational& p, int max_n) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0,1]");
  if (p == 0 || p == 1)
    throw degenerate_chain_error("p=" + format_rational(p) +
                                 " gives a deterministic permutation chain");
  TransferMatrix T = build_transfer_matrix(n, max_n);
  const int C = static_cast<int>(T.order.size());
  auto M = evaluate_transfer(T, p);

  // A = M^T - I; kernel vectors are the stationary directions.
  std::vector<std::vector<Rational>> A(C, std::vector<Rational>(C));
  for (int i = 0; i < C; ++i)
    for (int j = 0; j < C; ++j) A[i][j] = M[j][i] - Rational(i == j ? 1 : 0);

  // Gaussian elimination to row echelon form.
  std::vector<int> pivot_col_of_row;
  int row = 0;
  for (int col = 0; col < C && row < C; ++col) {
    int piv = -1;
    for (int r = row; r < C; ++r)
      if (A[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(A[piv], A[row]);
    for (int r = row + 1; r < C; ++r) {
      if (A[r][col] == 0) continue;
      Rational f = A[r][col] / A[row][col];
      for (int c = col; c < C; ++c) A[r][c] -= f * A[row][c];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  const int rank = row;
  if (rank != C - 1)
    throw degenerate_chain_error("fixed space has dimension " + std::to_string(C - rank) +
                                 ", expected 1");

  // The single pivot-free column is the free variable.
  std::vector<bool> is_pivot(C, false);
  for (int c : pivot_col_of_row) is_pivot[c] = true;
  int free_col = -1;
  for (int c = 0; c < C; ++c)
    if (!is_pivot[c]) { free_col = c; break; }

  std::vector<Rational> x(C, Rational(0));
  x[free_col] = 1;
  for (int r = rank - 1; r >= 0; --r) {
    int pc = pivot_col_of_row[r];
    Rational acc(0);
    for (int c = pc + 1; c < C; ++c) acc += A[r][c] * x[c];
    x[pc] = -acc / A[r][pc];
  }
  Rational total(0);
  for (const Rational& v : x) total += v;
  if (total == 0) throw degenerate_chain_error("kernel vector sums to zero");
  for (Rational& v : x) v /= total;
  for (const Rational& v : x)
    if (v <= 0) throw degenerate_chain_error("stationary vector not strictly positive");
  return x;
}

nlohmann::ordered_json transfer_to_json(const TransferMatrix& T) {
  nlohmann::ordered_json order = nlohmann::ordered_json::array();
  for (const auto& m : T.order) order.push_back(format_matching(m));
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& row : T.entries) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const auto& e : row) {
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (int k = 0; k <= e.degree(); ++k) coeffs.push_back(format_rational(e.coeff(k)));
      jrow.push_back(std::move(coeffs));
    }
    entries.push_back(std::move(jrow));
  }
  return nlohmann::ordered_json{{"n", T.n}, {"order", order}, {"entries", entries}};
}

}  // namespace looplab
