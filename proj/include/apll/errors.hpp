#pragma once

#include <stdexcept>
#include <string>

namespace apll {

/// A computation would exceed its configured size or work budget.
class limit_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate violates its structural invariants (membership, inverse
/// closure, sizes). Distinct from "the identity does not hold".
class malformed_candidate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace apll
