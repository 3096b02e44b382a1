#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultra {

enum class ErrorKind {
  SubFromFinite,
  DivisionByZero,
  NonMonomialInverse,
  NotAUnit,
  ValueNotInGroup,
  FieldMismatch,
  ZeroPolynomial,
  ZeroElement,
  ZeroDivisorAtPrecision,
  UnsupportedDenominator,
  DecompositionMismatch,
  InfeasibleSchedule,
  ValueGroupTooSparse,
  ResidueFieldTooSmall,
  CertificateFailure,
  PreconditionFlat,
  UnsupportedModel,
  NotBoundedBelow,
  ZeroTerm,
  Parse,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ultra
