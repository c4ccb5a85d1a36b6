#pragma once

#include <stdexcept>
#include <string>

namespace coxhyp {

// Error taxonomy. Every code belongs to one of the CLI exit classes:
// 2 = malformed input, 1 = mathematical failure, 3 = resource limit.
enum class ErrorCode {
  // input
  SyntaxError,
  UnknownVariable,
  InvalidInstance,
  ArityMismatch,
  InvalidArgument,
  // mathematical
  RingMismatch,
  GroupMismatch,
  NotHomogeneous,
  ZeroPolynomial,
  DegreeZeroInP1,
  InvalidEquation,
  OutOfRange,
  IndeterminacyLocus,
  NotOnHypersurface,
  PointNotOnVariety,
  KernelRankUnexpected,
  Internal,
  // resource
  ResourceLimit,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

const char* error_code_name(ErrorCode code);

// 1 mathematical failure, 2 input error, 3 resource limit.
int exit_class(ErrorCode code);

}  // namespace coxhyp
