#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singlattice {

// Malformed graph document. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The graph is structurally well formed but not a resolution graph
// (disconnected or not negative definite).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cycles of different graphs (different lengths) were combined.
class GraphMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A postcondition that the mathematics guarantees did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace singlattice
