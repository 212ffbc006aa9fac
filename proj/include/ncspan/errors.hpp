#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncspan {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingAssignment : public Error {
 public:
  explicit MissingAssignment(std::size_t var)
      : Error("no image assigned to variable X" + std::to_string(var)), variable(var) {}
  std::size_t variable;
};

class VariableCollision : public Error {
 public:
  explicit VariableCollision(std::size_t var)
      : Error("fresh variable X" + std::to_string(var) + " already occurs in the polynomial"),
        variable(var) {}
  std::size_t variable;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class OracleFailed : public Error {
 public:
  using Error::Error;
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(got)) {}
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t needed, std::size_t got)
      : Error("polynomial uses " + std::to_string(needed) + " variables but " +
              std::to_string(got) + " arguments were supplied") {}
};

class DuplicateNodes : public Error {
 public:
  DuplicateNodes() : Error("interpolation nodes must be pairwise distinct") {}
};

class NonzeroTrace : public Error {
 public:
  NonzeroTrace() : Error("matrix has nonzero trace") {}
};

class ConstantInput : public Error {
 public:
  ConstantInput() : Error("polynomial is constant") {}
};

class NotInSpan : public Error {
 public:
  NotInSpan() : Error("target does not lie in the span of the sampled values") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line_no, std::size_t col)
      : Error(std::to_string(line_no) + ":" + std::to_string(col) + ": " + what),
        reason(what),
        line(line_no),
        column(col) {}
  std::string reason;
  std::size_t line;
  std::size_t column;
};

class ExponentNegative : public SyntaxError {
 public:
  ExponentNegative(std::size_t line_no, std::size_t col)
      : SyntaxError("exponent must be a nonnegative integer literal", line_no, col) {}
};

}  // namespace ncspan
