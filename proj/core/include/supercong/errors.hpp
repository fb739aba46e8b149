#pragma once

#include <stdexcept>
#include <string>

namespace supercong {

/// Base class for every arithmetic failure raised by the library.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAUnit : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class DivisionByZero : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Raised when a truncated p-adic value cannot deliver the requested digits.
class PrecisionExhausted : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// p^(k+g) would not fit the 64-bit operand bound of the multiplication kernel.
class ModulusOverflow : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class ModulusMismatch : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// A harmonic-sum index k >= p would put p in a denominator.
class IndexExceedsPrime : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

class NonUnitDenominator : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// Precondition violation on a checker or engine entry point (bad prime, bad range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace supercong
