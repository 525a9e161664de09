#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "malcev/matrix.hpp"

namespace malcev {

/// One basis tuple on which an identity failed, with both sides evaluated.
/// Matrix-valued identities store their sides flattened row-major.
struct Violation {
  std::vector<std::size_t> tuple;
  Vector lhs;
  Vector rhs;
};

/// Verdict for a single named identity.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string check_name, bool is_required = true)
      : name(std::move(check_name)), required(is_required) {}

  std::string name;
  bool passed = true;
  /// Informational checks are reported but do not affect the overall verdict.
  bool required = true;
  std::size_t evaluated = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  void record(std::vector<std::size_t> tuple, Vector lhs, Vector rhs);
  /// Compares lhs against rhs and records a violation if they differ.
  void expect_equal(std::vector<std::size_t> tuple, Vector lhs, Vector rhs);
  void expect_zero(std::vector<std::size_t> tuple, Vector value);
};

class VerificationReport {
 public:
  VerificationReport() = default;
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  bool passed() const;

  CheckResult& add(CheckResult check);
  void append(const VerificationReport& other);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }
  /// Throws std::out_of_range if no check carries this name.
  const CheckResult& check(const std::string& name) const;
  bool has_check(const std::string& name) const;

  /// Line-oriented rendering: "name: pass" / "name: FAIL (k violations)"
  /// followed by one indented line per violation (at most ten per check).
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  std::vector<std::string> notes_;
};

}  // namespace malcev
