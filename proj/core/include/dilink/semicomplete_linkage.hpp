#pragma once

#include <span>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/path_system.hpp"
#include "dilink/solve_report.hpp"

namespace dilink {

/// A digraph with k ordered terminal pairs on 2k distinct vertices.
struct LinkageInstance {
  Digraph digraph;
  std::vector<TerminalPair> pairs;
};

/// Throws InvalidPairs unless the 2k terminals are distinct live vertices.
void check_terminal_pairs(const Digraph& d, std::span<const TerminalPair> pairs);

/// Everything the short-anchor construction needs to know about the
/// surrounding linkage problem.
struct AnchorContext {
  VertexList x;
  VertexList y;
  VertexList u;   // nearly in-dominating set of D - (X ∪ Y), |U| = 3k
  PathSystem q;   // minimum-vertex system of k disjoint U -> Y paths
};

struct AnchorOptions {
  /// Verify the out-neighbour bound before building. With the check off the
  /// construction is attempted anyway and goodness is only a preference.
  bool check_precondition = true;
};

/// Paths a_i -> s_i of length 2 or 3 (a a+ s or a a+ a++ s), pairwise
/// disjoint, inside (V - (V(Q) ∪ W ∪ X)) ∪ S ∪ A. Picks smallest ids first.
///
/// Throws PreconditionViolated naming the failing requirement, or
/// ConstructionFailed when the greedy choice runs dry.
PathSystem anchor_short_paths(const Digraph& d, const AnchorContext& context,
                              std::span<const Vertex> a, std::span<const Vertex> s,
                              std::span<const Vertex> w, const AnchorOptions& options = {});

/// Split of the sources by how well they reach U.
struct TerminalPartition {
  VertexList x1;       // sources with >= k distinct 2k-out-dominators of U
  VertexList x1_plus;  // x1_plus[i] is the matched out-neighbour of x1[i]
  VertexList x2;
};

TerminalPartition partition_terminals(const Digraph& d, std::span<const Vertex> x,
                                      std::span<const Vertex> y, std::span<const Vertex> u);

struct SemicompleteOptions {
  /// Check strong connectivity >= 3k and minimum out-degree >= 22k before
  /// running. Semicompleteness is always required.
  bool audit = true;
};

/// Links x_i to y_i in a semicomplete digraph. Throws InvalidPairs for
/// malformed terminals; everything else is reported in the SolveReport.
SolveReport solve_semicomplete(const Digraph& d, std::span<const TerminalPair> pairs,
                               const SemicompleteOptions& options = {});

}  // namespace dilink
