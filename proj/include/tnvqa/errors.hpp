#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tnvqa {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map failure classes to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested qubit count exceeds what the dense simulator supports.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Mismatched dimensions between states, operators or parameter vectors.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Index (qubit, cut) outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Invalid scalar argument (ebit budget, shot count, rank, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input failed a mathematical validity check (unitarity, hermiticity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Non-finite objective values or similar numerical breakdown.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tnvqa
