#pragma once

#include <stdexcept>
#include <string>

namespace salem {

/// A caller violated a documented precondition (zero input, bad prime,
/// non-monic polynomial, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix failed the isometry check M^T G M = G.
class NotAnIsometry : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A mathematical invariant that must hold for every valid input was
/// observed to fail. Seeing one of these means a bug (or a counterexample
/// to a theorem, which is less likely).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace salem
