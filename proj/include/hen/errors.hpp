#pragma once

#include <stdexcept>
#include <string>

namespace hen {

/// Violated precondition on mathematical input (bad factor, empty set, parity).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: group specs, set files, function files, manifests.
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured tensor or work budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Functions or sets living on different groups were combined.
struct GroupMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hen
