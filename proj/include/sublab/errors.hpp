#pragma once

#include <stdexcept>
#include <string>

namespace sublab {

enum class ErrorCode {
  DimensionMismatch,
  AntisymmetryViolation,
  SymmetryViolation,
  NotSkew,
  NotAdapted,
  DegenerateKappa,
  ParseError,
  OutOfDomain,
  RankDeficient,
  SingularMetric,
  UnknownExample,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-checkable code.  The CLI maps any
/// Error to exit code 2 (input/usage error).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace sublab
