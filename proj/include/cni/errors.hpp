#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cni {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two polynomials over different variable tables were combined.
class VarTableMismatch : public Error {
 public:
  VarTableMismatch() : Error("polynomials belong to different variable tables") {}
};

/// A division node whose denominator is identically zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation ran out of its step or wall-clock budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// Malformed construction: unresolved point, forward or cyclic reference,
/// degenerate predicate arguments.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// DSL syntax error. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A construction step the prover does not support. Carries the reason code
/// ("niu", "nfiu", "rn0u") the verdict should report.
class UnsupportedStep : public Error {
 public:
  UnsupportedStep(std::string code, std::size_t line, const std::string& message)
      : Error(message), code_(std::move(code)), line_(line) {}

  const std::string& code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  std::string code_;
  std::size_t line_;
};

}  // namespace cni
