#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidfrac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Structurally valid data that violates a rewriting-system constraint
/// (arity below two, duplicate rule, unknown letter, ...).
class InvalidSystem : public Error {
 public:
  using Error::Error;
};

/// Two morphisms were combined whose endpoints do not agree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A complement was requested for a forest that is not below the target.
class NotUpperBound : public Error {
 public:
  using Error::Error;
};

/// A rewriting or expansion loop ran past its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for the element's flavor (e.g. ordering a
/// group with torsion).
class FlavorError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidfrac
