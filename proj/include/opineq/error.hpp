#pragma once

#include <stdexcept>
#include <string>

namespace opineq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible shape.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation: non-Hermitian entries, a
/// spectrum outside a function's domain, an invalid interval, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The Jacobi sweep limit was reached before the off-diagonal mass vanished.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold for the supplied instance (sandwich
/// condition violated, function lacks the required catalog flag).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class UnknownCheckError : public Error {
 public:
  explicit UnknownCheckError(const std::string& name)
      : Error("unknown check: " + name) {}
};

}  // namespace opineq
