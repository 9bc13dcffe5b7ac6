#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncbinom {

/// Operands come from different algebra contexts, or name an undeclared
/// generator or parameter.
class ContextError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed expression text. `position()` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t position, std::size_t line,
             std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        position_(position), line_(line), column_(column) {}

  std::size_t position() const noexcept { return position_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t position_;
  std::size_t line_;
  std::size_t column_;
};

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A power series was requested outside its disc of convergence; carries the
/// certified radius bound that was compared against |lambda|.
class ConvergenceDomainError : public std::domain_error {
public:
  ConvergenceDomainError(const std::string &what, double bound,
                         double abs_lambda)
      : std::domain_error(what), bound_(bound), abs_lambda_(abs_lambda) {}

  double bound() const noexcept { return bound_; }
  double abs_lambda() const noexcept { return abs_lambda_; }

private:
  double bound_;
  double abs_lambda_;
};

/// Bad command-line usage, e.g. an unknown suite name.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace ncbinom
