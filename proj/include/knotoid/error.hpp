#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

// Base of every error the library raises on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text (bad token, misplaced section).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed text that violates a structural invariant of a code.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown crossing label '" + label + "'") {}
};

// The signed code has no diagram on the sphere.
class NonRealizable : public Error {
 public:
  using Error::Error;
};

// A move was requested whose pattern is absent or whose result is not planar.
class IllegalMove : public Error {
 public:
  using Error::Error;
};

}  // namespace knotoid
