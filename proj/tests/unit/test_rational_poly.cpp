#include <doctest.h>

#include <stdexcept>

#include "looplab/poly.hpp"
#include "looplab/rational.hpp"

using namespace looplab;

TEST_CASE("parse_rational accepts fractions, integers, and decimals") {
  CHECK(parse_rational("1/2") == Rational(1) / 2);
  CHECK(parse_rational("-3/7") == Rational(-3) / 7);
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("0.25") == Rational(1) / 4);
  CHECK(parse_rational("-0.1") == Rational(-1) / 10);
  CHECK(parse_rational(" 9/10 ") == Rational(9) / 10);
  CHECK(parse_rational("4/6") == Rational(2) / 3);
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("1/0"), std::exception);
  CHECK_THROWS_AS(parse_rational("abc"), std::exception);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::exception);
  CHECK_THROWS_AS(parse_rational(""), std::exception);
  CHECK_THROWS_AS(parse_rational("1//2"), std::exception);
}

TEST_CASE("format_rational round-trips through parse") {
  for (const char* text : {"0", "1", "-1", "1/2", "-22/7", "355/113"}) {
    Rational r = parse_rational(text);
    CHECK(parse_rational(format_rational(r)) == r);
    CHECK(format_rational(r) == text);
  }
}

TEST_CASE("univariate polynomial arithmetic") {
  PolyUni one(Rational(1));
  PolyUni p = PolyUni::monomial(1, Rational(1));
  PolyUni q = PolyUni(Rational(1)) - p;  // 1 - x

  CHECK(p + q == one);
  CHECK((p * q).degree() == 2);
  CHECK(p * q == q * p);
  CHECK((p - p) == PolyUni());
  CHECK(PolyUni().degree() == -1);

  // (x + (1-x))^3 expanded via distributivity stays 1.
  PolyUni cube = (p + q) * (p + q) * (p + q);
  CHECK(cube == one);

  CHECK(p.eval(Rational(2) / 3) == Rational(2) / 3);
  CHECK((p * p + q).eval(Rational(1) / 2) == Rational(3) / 4);
}

TEST_CASE("bias_weight_poly encodes p^l (1-p)^r") {
  PolyUni w = bias_weight_poly(2, 1);
  Rational p = Rational(1) / 3;
  CHECK(w.eval(p) == p * p * (1 - p));
  CHECK(bias_weight_poly(0, 0) == PolyUni(Rational(1)));
}

TEST_CASE("bivariate polynomial arithmetic and swap") {
  PolyBi p = PolyBi::outer(PolyUni::monomial(1, Rational(1)), PolyUni(Rational(1)));
  PolyBi q = PolyBi::outer(PolyUni(Rational(1)), PolyUni::monomial(1, Rational(1)));

  // (p+q)^2 = p^2 + 2pq + q^2
  PolyBi lhs = (p + q) * (p + q);
  PolyBi rhs = p * p + PolyBi(Rational(2)) * p * q + q * q;
  CHECK(lhs == rhs);

  CHECK(p.swapped() == q);
  CHECK((p * q).swapped() == p * q);
  CHECK(lhs.eval(Rational(1) / 2, Rational(1) / 3) == Rational(25) / 36);
  CHECK(PolyBi() + p == p);
}
