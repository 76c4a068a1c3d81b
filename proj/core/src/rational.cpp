#include "looplab/rational.hpp"

#include <cctype>

namespace looplab {

namespace {

bool valid_int_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + raw + "'");
  };
  auto first = raw.find_first_not_of(" \t");
  if (first == std::string::npos) return fail();
  std::string text = raw.substr(first, raw.find_last_not_of(" \t") - first + 1);
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!valid_int_text(n) || !valid_int_text(d)) return fail();
    Int den(d);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(Int(n), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    bool neg = !text.empty() && text[0] == '-';
    std::string head = text.substr(0, dot), frac = text.substr(dot + 1);
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (!valid_int_text(head) || frac.empty()) return fail();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int n = Int(head) * scale + Int(frac);
    if (neg) n = -n;
    return Rational(n, scale);
  }
  if (!valid_int_text(text)) return fail();
  return Rational(Int(text));
}

std::string format_rational(const Rational& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace looplab
