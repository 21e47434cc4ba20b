#pragma once

#include <stdexcept>
#include <string>

namespace qround {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or spec text. Line and column are 1-based; 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class InvalidRealization : public Error {
 public:
  using Error::Error;
};

/// A brute-force or exact search was asked to exceed its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An oracle gave an inconsistent answer or was queried illegally.
class OracleError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (algorithm contract violation, bad certificate).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qround

namespace qround {

/// Bad command-line or spec input (unknown names, malformed parameters).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qround
