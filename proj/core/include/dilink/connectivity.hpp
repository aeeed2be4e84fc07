#pragma once

#include <span>

#include "dilink/digraph.hpp"
#include "dilink/path_system.hpp"

namespace dilink {

/// Maximum number of internally disjoint (x, y)-paths; an arc x -> y counts
/// as one path. Computed by unit-vertex-capacity max flow.
int local_connectivity(const Digraph& d, Vertex x, Vertex y);

/// Vertex strong connectivity: the largest k such that D is k-strong, with
/// the complete digraph on n vertices at n-1. Returns 0 for non-strong input.
int kappa(const Digraph& d);

/// True iff D has at least k+1 vertices and stays strong after deleting any
/// k-1 of them. Much cheaper than kappa() when k is small.
bool is_k_strong(const Digraph& d, int k);

/// Outcome of a set-to-set disjoint path computation.
///
/// When infeasible, `separator` is a vertex set meeting every usable
/// path from the sources to the targets; its vertices outside the avoided set
/// number fewer than the requested path count.
struct MengerResult {
  bool feasible = false;
  PathSystem paths;
  VertexList separator;
  std::int64_t total_vertices = 0;
};

/// |X| vertex-disjoint paths from X onto Y (some bijection) in D - avoid.
/// Paths are listed in the order of X. Throws SetOverlap, SizeMismatch.
MengerResult menger_set_paths(const Digraph& d, std::span<const Vertex> from,
                              std::span<const Vertex> to, std::span<const Vertex> avoid);

/// |Y| disjoint paths starting anywhere in U, one ending at each y, with the
/// minimum total number of vertices (unit vertex costs). In a minimum system
/// only the first vertex of each path lies in U. Paths are listed in the
/// order of Y. Throws SetOverlap.
MengerResult min_vertex_menger(const Digraph& d, std::span<const Vertex> starts,
                               std::span<const Vertex> targets, std::span<const Vertex> avoid);

}  // namespace dilink
