#pragma once

#include <stdexcept>
#include <string>

namespace synclab {

// Bad sizes, parameters, shapes, or malformed input files. The CLI maps
// these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension mismatch between a graph and a phase vector.
class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed text input; carries the 1-based line number.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& message, int line)
      : ValidationError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Non-finite values or a failed eigensolve. The CLI maps these to exit
// code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace synclab
