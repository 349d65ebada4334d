#pragma once

#include <stdexcept>
#include <string>

namespace superch {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParityError : public Error {
 public:
  explicit ParityError(const std::string& what) : Error("parity error: " + what) {}
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension mismatch: " + what) {}
};

class NotInvertible : public Error {
 public:
  explicit NotInvertible(const std::string& what) : Error("not invertible: " + what) {}
};

class NotDivisible : public Error {
 public:
  explicit NotDivisible(const std::string& what) : Error("not divisible: " + what) {}
};

/// Raised when the generating-function construction produces a
/// non-polynomial coefficient. Never expected for formal symbols.
class ConjectureViolation : public Error {
 public:
  explicit ConjectureViolation(const std::string& what) : Error("conjecture violation: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace superch
