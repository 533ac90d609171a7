#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quintic {

/// Operands carry different field descriptors.
class FieldMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A form or matrix entry does not have the degree its position demands.
class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition of a mathematical operation does not hold
/// (non-injective input, failed divisibility, exhausted sampler, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic failure with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace quintic
