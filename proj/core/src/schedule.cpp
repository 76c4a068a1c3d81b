#include "looplab/schedule.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace looplab {

namespace {

void check_bias(const Rational& p) {
  if (p < 0 || p > 1)
    throw std::domain_error("bias " + format_rational(p) + " outside [0,1]");
}

bool interior(const Rational& p) { return p > 0 && p < 1; }

}  // namespace

BiasSchedule BiasSchedule::constant(const Rational& p) {
  check_bias(p);
  BiasSchedule s;
  s.kind_ = ScheduleKind::Constant;
  s.values_ = {p};
  return s;
}

BiasSchedule BiasSchedule::cyclic(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("cyclic schedule needs at least one value");
  for (const Rational& v : values) check_bias(v);
  BiasSchedule s;
  s.kind_ = ScheduleKind::Cyclic;
  s.values_ = std::move(values);
  return s;
}

BiasSchedule BiasSchedule::explicit_rows(std::vector<Rational> values, const Rational& tail) {
  for (const Rational& v : values) check_bias(v);
  check_bias(tail);
  BiasSchedule s;
  s.kind_ = ScheduleKind::Explicit;
  s.values_ = std::move(values);
  s.tail_ = tail;
  return s;
}

Rational BiasSchedule::bias_at(long row) const {
  if (row < 1) throw std::out_of_range("row index must be >= 1");
  switch (kind_) {
    case ScheduleKind::Constant:
      return values_[0];
    case ScheduleKind::Cyclic:
      return values_[static_cast<std::size_t>((row - 1) % static_cast<long>(values_.size()))];
    case ScheduleKind::Explicit:
      if (row <= static_cast<long>(values_.size()))
        return values_[static_cast<std::size_t>(row - 1)];
      return tail_;
  }
  throw std::logic_error("unreachable schedule kind");
}

bool BiasSchedule::provably_divergent() const {
  switch (kind_) {
    case ScheduleKind::Constant:
      return interior(values_[0]);
    case ScheduleKind::Cyclic:
      for (const Rational& v : values_)
        if (interior(v)) return true;
      return false;
    case ScheduleKind::Explicit:
      // Any finite prefix is irrelevant; only the tail recurs.
      return interior(tail_);
  }
  throw std::logic_error("unreachable schedule kind");
}

std::string BiasSchedule::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case ScheduleKind::Constant:
      out << "constant:" << format_rational(values_[0]);
      break;
    case ScheduleKind::Cyclic:
      out << "cyclic:";
      for (std::size_t i = 0; i < values_.size(); ++i)
        out << (i ? "," : "") << format_rational(values_[i]);
      break;
    case ScheduleKind::Explicit:
      out << "explicit:";
      for (std::size_t i = 0; i < values_.size(); ++i)
        out << (i ? "," : "") << format_rational(values_[i]);
      out << ";tail=" << format_rational(tail_);
      break;
  }
  return out.str();
}

nlohmann::ordered_json BiasSchedule::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case ScheduleKind::Constant: j["kind"] = "constant"; break;
    case ScheduleKind::Cyclic: j["kind"] = "cyclic"; break;
    case ScheduleKind::Explicit: j["kind"] = "explicit"; break;
  }
  j["values"] = nlohmann::ordered_json::array();
  for (const Rational& v : values_) j["values"].push_back(format_rational(v));
  if (kind_ == ScheduleKind::Explicit) j["tail"] = format_rational(tail_);
  return j;
}

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw std::invalid_argument(
      "schedule values must be strings like \"1/2\" or integers; got " + v.dump());
}

}  // namespace

BiasSchedule BiasSchedule::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("schedule JSON needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  std::vector<Rational> values;
  if (j.contains("values"))
    for (const auto& v : j.at("values")) values.push_back(rational_from_json(v));
  if (kind == "constant") {
    if (values.size() != 1)
      throw std::invalid_argument("constant schedule needs exactly one value");
    return constant(values[0]);
  }
  if (kind == "cyclic") return cyclic(std::move(values));
  if (kind == "explicit") {
    if (!j.contains("tail"))
      throw std::invalid_argument("explicit schedule needs a \"tail\" field");
    return explicit_rows(std::move(values), rational_from_json(j.at("tail")));
  }
  throw std::invalid_argument("unknown schedule kind \"" + kind + "\"");
}

BiasSchedule BiasSchedule::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("schedule \"" + text +
                                "\" (expected constant:P, cyclic:P1,P2,... or file:PATH)");
  std::string head = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  if (head == "constant") return constant(parse_rational(rest));
  if (head == "cyclic") {
    std::vector<Rational> values;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_rational(item));
    return cyclic(std::move(values));
  }
  if (head == "file") {
    std::ifstream in(rest);
    if (!in) throw std::invalid_argument("cannot open schedule file " + rest);
    nlohmann::json j;
    in >> j;
    return from_json(j);
  }
  throw std::invalid_argument("unknown schedule form \"" + head +
                              "\" (expected constant, cyclic or file)");
}

}  // namespace looplab
