#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix violates the Cartan axioms (or is malformed).
class InvalidCartan : public Error {
 public:
  using Error::Error;
};

/// Weyl group enumeration exceeded its bound.
class WeylTooLarge : public Error {
 public:
  using Error::Error;
};

/// fs_exp called on a series with nonzero constant term.
class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// fs_inv called on a series with zero constant term.
class NonUnit : public Error {
 public:
  using Error::Error;
};

/// Exact division by a linear form left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An operation would need more precision than its inputs carry.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace hecke
