#include "ppfq/error.hpp"

namespace ppfq {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotASubfield: return "NotASubfield";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ConstantInput: return "ConstantInput";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DegreeGuardExceeded: return "DegreeGuardExceeded";
    case ErrorKind::NotIrreducibleInput: return "NotIrreducibleInput";
    case ErrorKind::ExtensionTooLarge: return "ExtensionTooLarge";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::GeneratorInPrimeField: return "GeneratorInPrimeField";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_guard_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldTooLarge:
    case ErrorKind::ExtensionTooLarge:
    case ErrorKind::SearchSpaceTooLarge:
    case ErrorKind::DegreeGuardExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace ppfq
