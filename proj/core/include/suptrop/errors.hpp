#pragma once

#include <stdexcept>
#include <string>

namespace suptrop {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text did not match the .stm / scalar grammar. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Operands have incompatible shapes; the message carries both shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for this input (e.g. quasi-inverse of a
/// strictly singular matrix).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace suptrop
