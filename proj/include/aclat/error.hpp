#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aclat {

enum class ErrorKind {
  ReflexivityViolation,
  AntisymmetryViolation,
  TransitivityViolation,
  DuplicateLabel,
  UnknownLabel,
  CapExceeded,
  BudgetExceeded,
  NotALattice,
  NotDistributive,
  NotComparable,
  NotAChain,
  ComponentwiseMismatch,
  RoundTripFailure,
  EquivalenceMismatch,
  UniversalityFailure,
  DensityViolation,
  OracleInconsistency,
  RationalOverflow,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every domain failure surfaces as an Error whose kind() names the failure.
/// what() is "<Name>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace aclat
