#pragma once

#include <stdexcept>
#include <string>

namespace ellid {

// Base of every error raised by the library. Callers that only need to know
// "the evaluation failed" catch this; the audit engine inspects the subtype to
// classify the failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Elliptic argument too close to 1 for K to be meaningful in binary64.
class SingularArgumentError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Argument outside the range the implementation supports (e.g. solve_k).
class RangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A series hit its term cap or diverged.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// log-derivative requested where the theta value vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

class UnknownIdentityError : public Error {
 public:
  using Error::Error;
};

// Grid point violates an identity's parameter constraints.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

}  // namespace ellid
