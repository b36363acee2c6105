#pragma once

#include <stdexcept>
#include <string>

namespace brieskorn {

/// Malformed or out-of-range user input (tuple text, flags, preconditions).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration would exceed the configured work budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A criterion's dimensional precondition is not met; distinct from a
/// negative verdict.
struct CriterionInapplicable : std::runtime_error {
  explicit CriterionInapplicable(const std::string& msg)
      : std::runtime_error(msg) {}
};

/// Internal consistency check failed. Signals a bug, never bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace brieskorn
