#include "looplab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace looplab {

PolyUni::PolyUni(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

PolyUni PolyUni::monomial(int degree, Rational coeff) {
  PolyUni p;
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (coeff != 0) {
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = std::move(coeff);
  }
  return p;
}

Rational PolyUni::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

void PolyUni::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyUni& PolyUni::operator+=(const PolyUni& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyUni& PolyUni::operator-=(const PolyUni& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyUni operator*(const PolyUni& a, const PolyUni& b) {
  PolyUni out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Rational PolyUni::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyUni bias_weight_poly(int count_l, int count_r) {
  if (count_l < 0 || count_r < 0) throw std::invalid_argument("negative count");
  // (1-p)^count_r expanded, then shifted by p^count_l.
  std::vector<Rational> binom(count_r + 1, Rational(0));
  binom[0] = 1;
  for (int row = 1; row <= count_r; ++row)
    for (int k = row; k >= 1; --k) binom[k] += binom[k - 1];
  PolyUni out;
  Rational sign(1);
  for (int k = 0; k <= count_r; ++k) {
    out += PolyUni::monomial(count_l + k, sign * binom[k]);
    sign = -sign;
  }
  return out;
}

PolyBi::PolyBi(Rational constant) {
  if (constant != 0) g_.push_back({std::move(constant)});
}

PolyBi PolyBi::outer(const PolyUni& in_p, const PolyUni& in_q) {
  PolyBi out;
  if (in_p.is_zero() || in_q.is_zero()) return out;
  out.g_.resize(in_p.degree() + 1);
  for (int i = 0; i <= in_p.degree(); ++i) {
    out.g_[i].resize(in_q.degree() + 1, Rational(0));
    if (in_p.coeff(i) == 0) continue;
    for (int j = 0; j <= in_q.degree(); ++j) out.g_[i][j] = in_p.coeff(i) * in_q.coeff(j);
  }
  out.trim();
  return out;
}

int PolyBi::degree_q() const {
  int d = -1;
  for (const auto& row : g_) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

Rational PolyBi::coeff(int i, int j) const {
  if (i < 0 || i >= static_cast<int>(g_.size())) return Rational(0);
  if (j < 0 || j >= static_cast<int>(g_[i].size())) return Rational(0);
  return g_[i][j];
}

void PolyBi::trim() {
  for (auto& row : g_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!g_.empty() && g_.back().empty()) g_.pop_back();
}

PolyBi& PolyBi::operator+=(const PolyBi& o) {
  if (o.g_.size() > g_.size()) g_.resize(o.g_.size());
  for (std::size_t i = 0; i < o.g_.size(); ++i) {
    if (o.g_[i].size() > g_[i].size()) g_[i].resize(o.g_[i].size(), Rational(0));
    for (std::size_t j = 0; j < o.g_[i].size(); ++j) g_[i][j] += o.g_[i][j];
  }
  trim();
  return *this;
}

PolyBi& PolyBi::operator-=(const PolyBi& o) {
  if (o.g_.size() > g_.size()) g_.resize(o.g_.size());
  for (std::size_t i = 0; i < o.g_.size(); ++i) {
    if (o.g_[i].size() > g_[i].size()) g_[i].resize(o.g_[i].size(), Rational(0));
    for (std::size_t j = 0; j < o.g_[i].size(); ++j) g_[i][j] -= o.g_[i][j];
  }
  trim();
  return *this;
}

PolyBi operator*(const PolyBi& a, const PolyBi& b) {
  PolyBi out;
  if (a.is_zero() || b.is_zero()) return out;
  int dp = a.degree_p() + b.degree_p();
  int dq = a.degree_q() + b.degree_q();
  out.g_.assign(dp + 1, std::vector<Rational>(dq + 1, Rational(0)));
  for (std::size_t i = 0; i < a.g_.size(); ++i)
    for (std::size_t j = 0; j < a.g_[i].size(); ++j) {
      if (a.g_[i][j] == 0) continue;
      for (std::size_t k = 0; k < b.g_.size(); ++k)
        for (std::size_t l = 0; l < b.g_[k].size(); ++l)
          out.g_[i + k][j + l] += a.g_[i][j] * b.g_[k][l];
    }
  out.trim();
  return out;
}

Rational PolyBi::eval(const Rational& p, const Rational& q) const {
  Rational acc(0);
  Rational pi(1);
  for (const auto& row : g_) {
    Rational inner(0);
    for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * q + *it;
    acc += pi * inner;
    pi *= p;
  }
  return acc;
}

PolyBi PolyBi::swapped() const {
  PolyBi out;
  int dq = degree_q();
  if (dq < 0) return out;
  out.g_.assign(dq + 1, std::vector<Rational>(g_.size(), Rational(0)));
  for (std::size_t i = 0; i < g_.size(); ++i)
    for (std::size_t j = 0; j < g_[i].size(); ++j) out.g_[j][i] = g_[i][j];
  out.trim();
  return out;
}

Rational PolyBi::max_abs_coeff() const {
  Rational best(0);
  for (const auto& row : g_)
    for (const auto& c : row) {
      Rational a = c < 0 ? Rational(-c) : c;
      if (a > best) best = a;
    }
  return best;
}

}  // namespace looplab
