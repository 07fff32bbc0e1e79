#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace a2b {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two scalars from different field instances met in one operation.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A configuration violates a geometric precondition (equal points,
/// non-generic triple, triple point in a quadruple, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An internal consistency check failed. Never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace a2b
