#include "fqid/error.hpp"

namespace fqid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ConstantTermForbidden: return "ConstantTermForbidden";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LieAxiomViolation: return "LieAxiomViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::UnknownBuilder: return "UnknownBuilder";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotEnoughVariables: return "NotEnoughVariables";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::NotMultilinear: return "NotMultilinear";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace fqid
