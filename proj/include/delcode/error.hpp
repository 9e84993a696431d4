#pragma once

#include <stdexcept>
#include <string>

namespace delcode {

// Bad arguments: out-of-range indices, invalid parameters, malformed input.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive job would exceed its configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
 public:
  enum class Kind { no_valid_j, no_candidate, ambiguous, malformed, not_member };

  DecodeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(DecodeError::Kind kind) noexcept;

}  // namespace delcode
