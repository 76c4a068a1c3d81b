#pragma once

#include <vector>

#include "looplab/rational.hpp"

namespace looplab {

// Dense univariate polynomial over Rational; trailing zeros trimmed, so the
// zero polynomial has no coefficients and degree -1.
class PolyUni {
 public:
  PolyUni() = default;
  explicit PolyUni(Rational constant);
  static PolyUni monomial(int degree, Rational coeff);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  PolyUni& operator+=(const PolyUni& o);
  PolyUni& operator-=(const PolyUni& o);
  friend PolyUni operator+(PolyUni a, const PolyUni& b) { return a += b; }
  friend PolyUni operator-(PolyUni a, const PolyUni& b) { return a -= b; }
  friend PolyUni operator*(const PolyUni& a, const PolyUni& b);
  bool operator==(const PolyUni& o) const { return c_ == o.c_; }
  bool operator!=(const PolyUni& o) const { return c_ != o.c_; }

  Rational eval(const Rational& x) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// p^a (1-p)^b expanded; the building block of transfer entries.
PolyUni bias_weight_poly(int count_l, int count_r);

// Dense bivariate polynomial; grid_[i][j] multiplies p^i q^j.
class PolyBi {
 public:
  PolyBi() = default;
  explicit PolyBi(Rational constant);
  // P(p) * Q(q)
  static PolyBi outer(const PolyUni& in_p, const PolyUni& in_q);

  bool is_zero() const { return g_.empty(); }
  int degree_p() const { return static_cast<int>(g_.size()) - 1; }
  int degree_q() const;
  Rational coeff(int i, int j) const;

  PolyBi& operator+=(const PolyBi& o);
  PolyBi& operator-=(const PolyBi& o);
  friend PolyBi operator+(PolyBi a, const PolyBi& b) { return a += b; }
  friend PolyBi operator-(PolyBi a, const PolyBi& b) { return a -= b; }
  friend PolyBi operator*(const PolyBi& a, const PolyBi& b);
  bool operator==(const PolyBi& o) const { return g_ == o.g_; }
  bool operator!=(const PolyBi& o) const { return g_ != o.g_; }

  Rational eval(const Rational& p, const Rational& q) const;
  // Exchanges the two variables.
  PolyBi swapped() const;
  Rational max_abs_coeff() const;

 private:
  void trim();
  std::vector<std::vector<Rational>> g_;
};

}  // namespace looplab
