#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dilink/types.hpp"

namespace dilink {

enum class ErrorCode {
  SelfLoop,
  DuplicateArc,
  VertexOutOfRange,
  PartOverlap,
  ArityMismatch,
  NotAPartition,
  NotAComposition,
  NotSemicomplete,
  NotTournament,
  EvenOrder,
  KTooSmall,
  CoreNotStrong,
  SetOverlap,
  SizeMismatch,
  SameVertex,
  VertexInU,
  TooFewVertices,
  InvalidPairs,
  InvalidArgument,
  PreconditionViolated,
  ConstructionFailed,
  NotStrong,
  NotLQuasiTransitive,
  ThresholdUnreachable,
  Format,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every contract violation in the library is reported through this type.
// `witness` carries the offending vertices when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, VertexList witness = {});

  ErrorCode code() const noexcept { return code_; }
  const VertexList& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  VertexList witness_;
};

}  // namespace dilink
