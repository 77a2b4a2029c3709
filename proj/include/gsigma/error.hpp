#pragma once

#include <stdexcept>
#include <string>

namespace gsigma {

enum class ErrorCode {
  InvalidArgument,
  DimensionBound,
  IncompatibleVectors,
  ZeroVector,
  LogOfZero,
  NotConstantCurvature,
  InvalidIndexPattern,
  BoundInapplicable,
  NotDivisible,
  Internal,
};

// Every failure raised by the library carries one of the codes above; the C
// API maps them onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gsigma
