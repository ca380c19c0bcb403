#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller-supplied input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A denominator vanishes at the requested evaluation point.
class PoleAtPoint : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// q takes a value where q-integers are undefined (0 or +-1).
class DegenerateParameter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Crystal elements built over different signatures were combined.
class SignatureMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// The following signal internal inconsistencies, never bad input.

class LimitUndefined : public Error {
 public:
  using Error::Error;
};

class NonPolynomialResult : public Error {
 public:
  using Error::Error;
};

class FixedPointViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ybx
