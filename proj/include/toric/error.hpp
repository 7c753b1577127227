#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorCode {
  ParseError,
  ValidationError,
  ZeroVector,
  NotStronglyConvex,
  SpanViolation,
  NotContained,
  NotCovering,
  ApexInHyperplane,
  NotInterior,
  NotFullDim,
  NotAPermutation,
  NotAComplex,
  NotQCartier,
  NotComplete,
  NotAmple,
  WrongDimension,
  InvalidShelling,
  InvalidFan,
  Internal,
};

std::string_view error_name(ErrorCode code);

/// Distinct process exit status per error class (success is 0).
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace toric
