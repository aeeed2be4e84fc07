#pragma once

#include <string>
#include <vector>

#include "dilink/path_system.hpp"

namespace dilink {

enum class Outcome { Linked, HypothesisViolated, StageFailed };

std::string_view to_string(Outcome outcome) noexcept;

/// One line of a hypothesis audit, e.g. {"kappa", ">= 6", ">= 6", true}.
struct AuditEntry {
  std::string name;
  std::string requirement;
  std::string observed;
  bool passed = false;
  bool skipped = false;
};

/// What a solver produced. A Linked report always carries a path system that
/// passed verify_linkage against the input digraph.
struct SolveReport {
  Outcome outcome = Outcome::StageFailed;
  PathSystem paths;
  std::string hypothesis;  // set for HypothesisViolated
  std::string stage;       // set for StageFailed
  std::string detail;
  VertexList witness;
  std::vector<AuditEntry> audit;

  bool linked() const noexcept { return outcome == Outcome::Linked; }
};

}  // namespace dilink
