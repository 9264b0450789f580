#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irrep {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed DSL, size caps, maps that are not automorphisms.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A structural invariant that the mathematics guarantees did not hold.
/// Seeing one of these means the implementation is wrong, not the input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace irrep
