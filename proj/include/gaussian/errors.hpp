#pragma once

#include <stdexcept>
#include <string>

namespace gaussian {

// Base class for everything thrown by the kernel.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different rings (or fields).
struct RingMismatchError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

// Invalid argument for an operation (unit ideal, non-homogeneous generator, ...).
struct DomainError : Error {
  using Error::Error;
};

// A configurable effort budget (reduction steps, wall clock, enumeration size)
// was exhausted. Deliberately an error, never a silent partial result.
struct BudgetExceededError : Error {
  using Error::Error;
};

}  // namespace gaussian
