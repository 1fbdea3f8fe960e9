#pragma once

#include <stdexcept>
#include <string>

namespace witnesskit {

enum class ErrorCode {
  InvalidArgument = 1,
  DimensionMismatch,
  ConvergenceFailure,
  RankDeficient,
  NotHermitian,
  NotOrthonormal,
  NotNormalized,
  NotProjector,
  InvalidRank,
  InvalidParams,
  NonRealExpectation,
  NotAState,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace witnesskit
