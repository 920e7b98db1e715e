#pragma once

#include <stdexcept>
#include <string>

namespace torus2 {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side precondition failed (bad parameter, improper coloring, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands of different GF(2) ranks were combined.
class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The requested enumeration exceeds the configured budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagreed, or a
// supposed group action is not one.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// A 2-dimensional poset whose boundary is not a single cycle with vertices.
class UnsupportedShape : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, int line)
      : InvalidArgument(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace torus2
