#pragma once

#include <span>
#include <vector>

#include "dilink/composition.hpp"
#include "dilink/digraph.hpp"
#include "dilink/solve_report.hpp"

namespace dilink {

/// D with every arc inside a part removed. `parts` must partition the live
/// vertices of D. Throws NotAPartition.
Digraph strip_intra_part_arcs(const Digraph& d, const std::vector<VertexList>& parts);

/// Auxiliary semicomplete digraph built from a stripped composition: inside
/// each part, Y ∩ S_i and S_i \ Y become complete digraphs and Y ∩ S_i
/// dominates the rest of S_i. Expects no arcs inside parts.
Digraph saturate_parts(const Digraph& d0, const std::vector<VertexList>& parts,
                       std::span<const Vertex> y);

/// A minimal path with the endpoints of p inside V(p): repeatedly replaces p
/// by a shortest path of D<V(p)> until the length stops dropping.
Path minimalize_path(const Digraph& d, const Path& p);

struct CompositionSolveOptions {
  /// Check 3k-strong, minimum out-degree >= 23k and |D - S_i| >= 2k-3, and
  /// keep checking the last one as pairs are peeled off.
  bool audit = true;
};

/// Links x_i to y_i in the semicomplete composition D with the given parts.
/// Throws InvalidPairs, NotAPartition, NotAComposition on malformed input.
SolveReport solve_composition(const Digraph& d, const std::vector<VertexList>& parts,
                              std::span<const TerminalPair> pairs,
                              const CompositionSolveOptions& options = {});

SolveReport solve_composition(const CompositionSpec& spec, std::span<const TerminalPair> pairs,
                              const CompositionSolveOptions& options = {});

}  // namespace dilink
