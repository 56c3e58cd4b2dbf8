#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ppsp {

/// Input outside the domain an operation is defined on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two independent computations of the same quantity disagreed.
/// This always indicates an implementation bug, never bad input.
class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A closed-form count evaluated to a non-integer or a negative value.
class NonIntegralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An aggregate identity failed while assembling a report.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string identity, const std::string& detail)
      : std::logic_error(identity + ": " + detail), identity_(std::move(identity)) {}

  const std::string& identity() const noexcept { return identity_; }

 private:
  std::string identity_;
};

}  // namespace ppsp
