#pragma once

#include <stdexcept>
#include <string>

namespace hmc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, unparsable rationals, wrong shapes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a mathematical contract (proportional
/// covectors, failed spectrum validation, missing spectrum table, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic contract violations: division by zero, non-invertible series,
/// evaluation at a pole.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

}  // namespace hmc
