#pragma once

#include <stdexcept>
#include <string>

namespace sepcheck {

/// Malformed or inconsistent input: bad files, dimension mismatches,
/// simplices that are not in the complex they claim to belong to.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on objects that do not meet its standing
/// assumptions (for instance a map whose domain is not a certified manifold).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A theorem's hypothesis is false for the given instance; the formula is
/// not evaluated outside its hypotheses.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(std::string hypothesis)
      : std::runtime_error("hypothesis not satisfied: " + hypothesis),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A hard mathematical assertion failed. Always a bug, never a finding.
class AssertionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sepcheck
