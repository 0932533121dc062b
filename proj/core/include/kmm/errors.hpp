#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmm {

// Bad input: malformed values, inconsistent sizes, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands built for different qubit counts.
class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Argument outside the mathematical domain of a function.
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Text input that could not be parsed. `line` is 1-based, 0 when unknown.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Linear system without a unique (up to phase) solution.
class DegeneracyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Requested input (e.g. a coordinates file) was not supplied.
class NotAvailableError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Desk-scale caps exceeded (dense matrices, group orders, table sizes).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kmm
