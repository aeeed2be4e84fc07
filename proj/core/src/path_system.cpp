#include "dilink/path_system.hpp"
#include "dilink/solve_report.hpp"

#include <algorithm>

#include "dilink/error.hpp"

namespace dilink {

VertexList PathSystem::initial_vertices() const {
  VertexList out;
  for (const Path& p : paths) {
    if (!p.empty()) out.push_back(p.front());
  }
  return out;
}

VertexList PathSystem::terminal_vertices() const {
  VertexList out;
  for (const Path& p : paths) {
    if (!p.empty()) out.push_back(p.back());
  }
  return out;
}

VertexList PathSystem::interior_vertices() const {
  VertexList out;
  for (const Path& p : paths) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) out.push_back(p[i]);
  }
  return out;
}

VertexList PathSystem::all_vertices() const {
  VertexList out;
  for (const Path& p : paths) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t PathSystem::vertex_count() const {
  std::size_t total = 0;
  for (const Path& p : paths) total += p.size();
  return total;
}

Path concatenate(const Path& a, const Path& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.back() != b.front()) {
    throw Error(ErrorCode::InvalidArgument, "paths do not meet", {a.back(), b.front()});
  }
  Path out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

VertexList sources_of(std::span<const TerminalPair> pairs) {
  VertexList out;
  for (const auto& p : pairs) out.push_back(p.source);
  return out;
}

VertexList targets_of(std::span<const TerminalPair> pairs) {
  VertexList out;
  for (const auto& p : pairs) out.push_back(p.target);
  return out;
}

std::string_view to_string(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::Linked: return "linked";
    case Outcome::HypothesisViolated: return "hypothesis_violated";
    case Outcome::StageFailed: return "stage_failed";
  }
  return "unknown";
}

}  // namespace dilink
