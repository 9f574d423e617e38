#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppfq {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  NotASubfield,
  FieldTooLarge,
  ConstantInput,
  ZeroPolynomial,
  DegreeGuardExceeded,
  NotIrreducibleInput,
  ExtensionTooLarge,
  DegreeTooSmall,
  NotPrimePower,
  SearchSpaceTooLarge,
  SyntaxError,
  GeneratorInPrimeField,
  ExponentOverflow,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

// Guard violations (size limits) as opposed to malformed input.
bool is_guard_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace ppfq
