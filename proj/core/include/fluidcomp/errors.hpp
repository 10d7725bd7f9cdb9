#pragma once

#include <stdexcept>

namespace fluidcomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The array geometry admits no position vector (region too short for the
/// minimum spacing, or a position vector violating ordering/range/spacing).
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// A power or energy budget is negative.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A linear system that should be positive definite failed to factor.
class SingularityError : public Error {
 public:
  using Error::Error;
};

}  // namespace fluidcomp
