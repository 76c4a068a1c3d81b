#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "looplab/rational.hpp"

namespace looplab {

enum class ScheduleKind { Constant, Cyclic, Explicit };

// Bias sequence (p_j) over rows j >= 1.  Constant repeats one value, cyclic
// repeats a finite list, explicit lists a prefix and continues with a tail
// value forever after.
class BiasSchedule {
 public:
  static BiasSchedule constant(const Rational& p);
  static BiasSchedule cyclic(std::vector<Rational> values);
  static BiasSchedule explicit_rows(std::vector<Rational> values, const Rational& tail);

  ScheduleKind kind() const { return kind_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& tail() const { return tail_; }

  Rational bias_at(long row) const;  // row >= 1

  // True when sum_j (p_j (1-p_j))^n provably diverges for every n: some bias
  // recurring forever lies strictly inside (0,1).
  bool provably_divergent() const;

  // "constant:1/2", "cyclic:1/5,4/5", "explicit:1/3,1/4;tail=1/2".
  std::string describe() const;

  // {"kind": "...", "values": ["1/2", ...], "tail": "..."} (tail only for
  // explicit).  from_json also accepts integer literals in values.
  nlohmann::ordered_json to_json() const;
  static BiasSchedule from_json(const nlohmann::json& j);

  // Flag grammar: "constant:P", "cyclic:P1,P2,...", "file:PATH" where PATH
  // holds the JSON form.  P parses like parse_rational.
  static BiasSchedule parse(const std::string& text);

 private:
  BiasSchedule() = default;

  ScheduleKind kind_ = ScheduleKind::Constant;
  std::vector<Rational> values_;
  Rational tail_ = 0;
};

}  // namespace looplab
