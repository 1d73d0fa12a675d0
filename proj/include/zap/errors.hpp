#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zap {

enum class ErrorCode {
  PoleAtOne,
  PrecisionLoss,
  CircleHitsPole,
  OutOfRegion,
  WindingNotOne,
  NewtonDiverged,
  BoundaryRoot,
  Unresolved,
  MultiplicityUnresolved,
  NearRoot,
  DomainTooSmall,
  QuadratureStall,
  ManifestMismatch,
  ChecksumMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zap
