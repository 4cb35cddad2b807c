#pragma once

#include <stdexcept>
#include <string>

namespace pantsbd {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic misuse: division by zero, mixed backends, log of a non-positive value.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Inputs outside an operation's domain (bad dimensions, indices, parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A ratio would divide by a vanishing wedge product.
class DegenerateFlagsError : public Error {
 public:
  explicit DegenerateFlagsError(const std::string& where)
      : Error("degenerate flags: " + where) {}
};

// An assembled invariant that must be positive is not.
class PositivityViolation : public Error {
 public:
  explicit PositivityViolation(const std::string& where)
      : Error("positivity violation: " + where) {}
};

}  // namespace pantsbd
