#include "malcev/report.hpp"

#include <stdexcept>

namespace malcev {

void CheckResult::record(std::vector<std::size_t> tuple, Vector lhs, Vector rhs) {
  passed = false;
  violations.push_back({std::move(tuple), std::move(lhs), std::move(rhs)});
}

void CheckResult::expect_equal(std::vector<std::size_t> tuple, Vector lhs, Vector rhs) {
  ++evaluated;
  if (lhs != rhs) record(std::move(tuple), std::move(lhs), std::move(rhs));
}

void CheckResult::expect_zero(std::vector<std::size_t> tuple, Vector value) {
  ++evaluated;
  if (!is_zero(value)) {
    Vector zero;
    zero.reserve(value.size());
    for (const auto& s : value) zero.push_back(s - s);
    record(std::move(tuple), std::move(value), std::move(zero));
  }
}

bool VerificationReport::passed() const {
  for (const auto& c : checks_)
    if (c.required && !c.passed) return false;
  return true;
}

CheckResult& VerificationReport::add(CheckResult check) {
  checks_.push_back(std::move(check));
  return checks_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& n : other.notes_) notes_.push_back(n);
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

bool VerificationReport::has_check(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return true;
  return false;
}

namespace {

std::string tuple_string(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::string out;
  if (!subject_.empty()) out += subject_ + "\n";
  for (const auto& c : checks_) {
    out += c.name + ": ";
    if (c.passed) {
      out += "pass";
    } else {
      out += "FAIL (" + std::to_string(c.violations.size()) + " of " +
             std::to_string(c.evaluated) + " tuples)";
    }
    if (!c.required) out += " [informational]";
    out += "\n";
    for (const auto& n : c.notes) out += "  note: " + n + "\n";
    constexpr std::size_t shown = 10;
    for (std::size_t i = 0; i < c.violations.size() && i < shown; ++i) {
      const auto& v = c.violations[i];
      out += "  " + tuple_string(v.tuple) + " lhs=" + to_string(v.lhs) + " rhs=" + to_string(v.rhs) +
             "\n";
    }
    if (c.violations.size() > shown)
      out += "  ... " + std::to_string(c.violations.size() - shown) + " more\n";
  }
  for (const auto& n : notes_) out += "note: " + n + "\n";
  out += std::string("overall: ") + (passed() ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace malcev
