#include "aclat/error.hpp"

namespace aclat {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ReflexivityViolation: return "ReflexivityViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::TransitivityViolation: return "TransitivityViolation";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotAChain: return "NotAChain";
    case ErrorKind::ComponentwiseMismatch: return "ComponentwiseMismatch";
    case ErrorKind::RoundTripFailure: return "RoundTripFailure";
    case ErrorKind::EquivalenceMismatch: return "EquivalenceMismatch";
    case ErrorKind::UniversalityFailure: return "UniversalityFailure";
    case ErrorKind::DensityViolation: return "DensityViolation";
    case ErrorKind::OracleInconsistency: return "OracleInconsistency";
    case ErrorKind::RationalOverflow: return "RationalOverflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace aclat
