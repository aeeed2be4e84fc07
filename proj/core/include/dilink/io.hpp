#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dilink/digraph.hpp"
#include "dilink/dominators.hpp"
#include "dilink/lqt_linkage.hpp"
#include "dilink/oracle.hpp"
#include "dilink/path_system.hpp"
#include "dilink/solve_report.hpp"

namespace dilink {

using Json = nlohmann::json;

/// A digraph file: {"n": N, "arcs": [[u,v],...], "parts": [[...],...]?}.
/// Any other top-level keys (seed, family, ...) are kept in `meta`.
struct DigraphDocument {
  Digraph digraph;
  std::vector<VertexList> parts;
  Json meta = Json::object();
};

/// Canonical form: arcs in lexicographic order, keys sorted.
Json to_json(const Digraph& d, const std::vector<VertexList>& parts = {},
             const Json& meta = Json::object());

/// Throws Error(Format) with a line/column or field diagnostic, or the
/// digraph construction errors (SelfLoop, DuplicateArc, VertexOutOfRange).
DigraphDocument parse_digraph(const std::string& text);
DigraphDocument digraph_from_json(const Json& j);

Json to_json(const PathSystem& system);
PathSystem path_system_from_json(const Json& j);
PathSystem parse_path_system(const std::string& text);

Json to_json(const SolveReport& report);
Json to_json(const VerifyReport& report);
Json to_json(const AuxiliaryDigraph& aux);
Json to_json(const GoodnessProfile& profile);
Json to_json(const NearlyInDominatingCheck& check);

/// "x1:y1,x2:y2" -> pairs. Throws Error(Format).
std::vector<TerminalPair> parse_pairs(const std::string& text);

/// Parses JSON text, converting parse errors into Error(Format) with the
/// line and column of the failure.
Json parse_json(const std::string& text);

/// One JSON value per line, compact, newline-terminated.
std::string dump(const Json& j);

/// Graphviz rendering; arcs on `highlight` paths are drawn bold.
std::string to_dot(const Digraph& d, const PathSystem* highlight = nullptr);

}  // namespace dilink
