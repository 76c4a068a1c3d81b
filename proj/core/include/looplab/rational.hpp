#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace looplab {

using Int = boost::multiprecision::cpp_int;
// Kept canonical by the backend: gcd(num, den) == 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

// "3", "-2/7", or a plain decimal like "0.125" (converted exactly).
Rational parse_rational(const std::string& text);

// Canonical text form: "n" when the denominator is 1, else "n/d".
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace looplab
