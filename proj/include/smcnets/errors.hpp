#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smcnets {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax (formula, term, theory file or net JSON).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Unknown names, arity mismatches and ill-formed nets.
class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace smcnets
