#include "looplab/matching.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "looplab/errors.hpp"

namespace looplab {

void validate_involution(const std::vector<int>& partner) {
  const int m = static_cast<int>(partner.size());
  if (m % 2 != 0) throw structure_error("odd number of points");
  for (int i = 0; i < m; ++i) {
    if (partner[i] < 0 || partner[i] >= m)
      throw structure_error("partner out of range at point " + std::to_string(i + 1));
    if (partner[i] == i)
      throw structure_error("fixed point at " + std::to_string(i + 1));
    if (partner[partner[i]] != i)
      throw structure_error("not an involution at point " + std::to_string(i + 1));
  }
}

namespace {

std::string pair_text(int a, int b) {
  return "(" + std::to_string(std::min(a, b) + 1) + "," +
         std::to_string(std::max(a, b) + 1) + ")";
}

// On a crossing, reports the two offending pairs.
void check_noncrossing_or_throw(const std::vector<int>& partner) {
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i) {
    if (partner[i] > i) {
      stack.push_back(i);
    } else {
      // An involution guarantees a nonempty stack here.
      if (stack.back() != partner[i])
        throw structure_error("crossing at " + pair_text(stack.back(), partner[stack.back()]) +
                              "," + pair_text(partner[i], i));
      stack.pop_back();
    }
  }
}

}  // namespace

bool is_noncrossing(const std::vector<int>& partner) {
  validate_involution(partner);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(partner.size()); ++i) {
    if (partner[i] > i) {
      stack.push_back(i);
    } else if (stack.empty() || stack.back() != partner[i]) {
      return false;
    } else {
      stack.pop_back();
    }
  }
  return true;
}

Matching::Matching(std::vector<int> partner) : partner_(std::move(partner)) {
  validate_involution(partner_);
  check_noncrossing_or_throw(partner_);
}

namespace {

// Always matches the smallest open point to ascending candidates, so the
// output is lexicographic on the partner sequence.
void enumerate_rec(std::vector<int>& partner, std::vector<Matching>& out) {
  const int sz = static_cast<int>(partner.size());
  int first = -1;
  for (int i = 0; i < sz; ++i)
    if (partner[i] < 0) { first = i; break; }
  if (first < 0) {
    out.push_back(Matching(partner));
    return;
  }
  for (int j = first + 1; j < sz; ++j) {
    if (partner[j] >= 0) continue;
    bool ok = true;
    int open_between = 0;
    for (int p = first + 1; p < j && ok; ++p) {
      if (partner[p] < 0) ++open_between;
      else if (partner[p] < first || partner[p] > j) ok = false;  // would cross
    }
    if (!ok || open_between % 2 != 0) continue;
    partner[first] = j;
    partner[j] = first;
    enumerate_rec(partner, out);
    partner[first] = -1;
    partner[j] = -1;
  }
}

}  // namespace

std::vector<Matching> enumerate_matchings(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<Matching> out;
  if (n == 0) {
    out.push_back(Matching(std::vector<int>{}));
    return out;
  }
  std::vector<int> partner(2 * n, -1);
  enumerate_rec(partner, out);
  return out;
}

Matching rotate_matching(const Matching& m, int steps) {
  const int sz = m.points();
  if (sz == 0) return m;
  int s = ((steps % sz) + sz) % sz;
  std::vector<int> out(sz);
  for (int i = 0; i < sz; ++i) {
    int src = (i - s + sz) % sz;
    out[i] = (m.partner(src) + s) % sz;
  }
  return Matching(std::move(out));
}

std::string format_matching(const Matching& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.points(); ++i) {
    if (m.partner(i) < i) continue;
    if (!first) os << ",";
    os << "(" << i + 1 << "," << m.partner(i) + 1 << ")";
    first = false;
  }
  return os.str();
}

Matching parse_matching(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::invalid_argument("expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos) + " in '" + text + "'");
    ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("expected a point label at offset " +
                                  std::to_string(pos) + " in '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  skip_ws();
  while (pos < text.size()) {
    expect('(');
    int a = read_int();
    expect(',');
    int b = read_int();
    expect(')');
    pairs.emplace_back(a, b);
    skip_ws();
    if (pos < text.size()) expect(',');
    skip_ws();
  }
  if (pairs.empty()) throw std::invalid_argument("empty matching text");
  int sz = 2 * static_cast<int>(pairs.size());
  std::vector<int> partner(sz, -1);
  for (auto [a, b] : pairs) {
    auto bad = [&](const std::string& why) {
      return std::invalid_argument(why + " at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
    };
    if (a < 1 || a > sz || b < 1 || b > sz) throw bad("point out of range");
    if (a == b) throw bad("self-paired point");
    if (partner[a - 1] >= 0 || partner[b - 1] >= 0) throw bad("point used twice");
    partner[a - 1] = b - 1;
    partner[b - 1] = a - 1;
  }
  return Matching(std::move(partner));  // crossing check names the pair
}

nlohmann::ordered_json matching_to_json(const Matching& m) {
  std::vector<int> one_based(m.points());
  for (int i = 0; i < m.points(); ++i) one_based[i] = m.partner(i) + 1;
  return nlohmann::ordered_json{{"n", m.n()}, {"partner", one_based}};
}

Matching matching_from_json(const nlohmann::json& j) {
  std::vector<int> partner = j.at("partner").get<std::vector<int>>();
  for (int& v : partner) --v;
  Matching m(std::move(partner));
  if (j.contains("n") && j.at("n").get<int>() != m.n())
    throw structure_error("n field disagrees with partner length");
  return m;
}

}  // namespace looplab
