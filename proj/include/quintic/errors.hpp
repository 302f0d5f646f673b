#pragma once

#include <stdexcept>
#include <string>

namespace quintic {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to act on an input for which it has no value
/// (zero polynomials in a resultant, x = 0 in a fifth-power class, ...).
class UndefinedInput : public Error {
 public:
  using Error::Error;
};

/// The caller broke a precondition that is cheap to state but not a
/// mathematical degeneracy (mismatched fields, off-curve points, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The input lies on an excluded locus (singular curve, t = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Numerical precision was not enough to separate or certify something.
/// Callers may retry with more bits.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace quintic
