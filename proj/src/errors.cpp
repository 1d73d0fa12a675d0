#include "zap/errors.hpp"

namespace zap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::PoleAtOne: return "PoleAtOne";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::CircleHitsPole: return "CircleHitsPole";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::WindingNotOne: return "WindingNotOne";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::BoundaryRoot: return "BoundaryRoot";
    case ErrorCode::Unresolved: return "Unresolved";
    case ErrorCode::MultiplicityUnresolved: return "MultiplicityUnresolved";
    case ErrorCode::NearRoot: return "NearRoot";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::QuadratureStall: return "QuadratureStall";
    case ErrorCode::ManifestMismatch: return "ManifestMismatch";
    case ErrorCode::ChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace zap
