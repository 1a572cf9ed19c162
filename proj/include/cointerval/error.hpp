#pragma once

#include <stdexcept>
#include <string>

namespace cointerval {

/// Base class for every error raised by the library. Each subclass names one
/// failure mode so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedRing : public Error { using Error::Error; };
class DimensionMismatch : public Error { using Error::Error; };
class RingMismatch : public Error { using Error::Error; };
class NonCommutingCocone : public Error { using Error::Error; };
class NotFree : public Error { using Error::Error; };
class InvalidMorphism : public Error { using Error::Error; };
class NonComposable : public Error { using Error::Error; };
class NonParallel : public Error { using Error::Error; };
class DepthExceeded : public Error { using Error::Error; };
class CapExceeded : public Error { using Error::Error; };
class BoundaryMismatch : public Error { using Error::Error; };
class MissingLattice : public Error { using Error::Error; };
class NotRepresentable : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };
class UnknownScenario : public Error { using Error::Error; };

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cointerval
