#include "errors.hpp"

namespace coxhyp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::DegreeZeroInP1: return "DegreeZeroInP1";
    case ErrorCode::InvalidEquation: return "InvalidEquation";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::IndeterminacyLocus: return "IndeterminacyLocus";
    case ErrorCode::NotOnHypersurface: return "NotOnHypersurface";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::KernelRankUnexpected: return "KernelRankUnexpected";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

int exit_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::InvalidInstance:
    case ErrorCode::ArityMismatch:
    case ErrorCode::InvalidArgument:
      return 2;
    case ErrorCode::ResourceLimit:
      return 3;
    default:
      return 1;
  }
}

}  // namespace coxhyp
