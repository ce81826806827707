#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fqid {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  NoDefaultModulus,
  FieldTooLarge,
  DivisionByZero,
  SyntaxError,
  UnknownVariable,
  ConstantTermForbidden,
  ZeroPolynomial,
  ShapeMismatch,
  LieAxiomViolation,
  DimensionMismatch,
  FieldMismatch,
  SearchSpaceTooLarge,
  NotAnIdeal,
  UnknownBuilder,
  BudgetExceeded,
  NotEnoughVariables,
  FlavorMismatch,
  NotMultilinear,
  WitnessInvalid,
  NotNested,
  NotALieAlgebra,
  InvalidArgument,
  Overflow,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error carrying the byte offset at which parsing failed.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fqid
