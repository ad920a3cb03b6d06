#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liesym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

enum class ParseErrorKind {
  Syntax,
  FloatLiteral,
  UndeclaredIdentifier,
  UnboundParameter,
  DuplicateEquation,
  MissingEquation,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        kind_(kind),
        line_(line),
        column_(column) {}

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Raised when an input violates a mathematical hypothesis of an analysis
// (not quasihomogeneous, nonpositive weights, ...). The CLI maps these to exit code 3.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotQuasihomogeneous : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NotSemiQuasihomogeneous : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class UnsupportedWeights : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class DependentBasis : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeded a hard internal limit. Exit code 4.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace liesym
