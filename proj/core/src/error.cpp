#include "dilink/error.hpp"

namespace dilink {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::PartOverlap: return "PartOverlap";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotAComposition: return "NotAComposition";
    case ErrorCode::NotSemicomplete: return "NotSemicomplete";
    case ErrorCode::NotTournament: return "NotTournament";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::CoreNotStrong: return "CoreNotStrong";
    case ErrorCode::SetOverlap: return "SetOverlap";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::VertexInU: return "VertexInU";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::InvalidPairs: return "InvalidPairs";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::NotStrong: return "NotStrong";
    case ErrorCode::NotLQuasiTransitive: return "NotLQuasiTransitive";
    case ErrorCode::ThresholdUnreachable: return "ThresholdUnreachable";
    case ErrorCode::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, VertexList witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace dilink
