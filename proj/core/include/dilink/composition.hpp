#pragma once

#include <vector>

#include "dilink/digraph.hpp"

namespace dilink {

/// One part S_i of a composition: its vertex ids in the realization (local id j
/// maps to vertices[j]) and the internal digraph on local ids.
struct Part {
  VertexList vertices;
  Digraph inner;
};

/// D = H[S_1, ..., S_h]: every arc v_i v_j of H becomes all arcs S_i -> S_j.
struct CompositionSpec {
  Digraph outer;
  std::vector<Part> parts;

  /// Vertex sets of the parts, in part order.
  std::vector<VertexList> part_sets() const;
};

/// Realizes the composition. Parts must partition 0..N-1.
/// Throws ArityMismatch, PartOverlap, NotAPartition.
Digraph compose(const CompositionSpec& spec);

/// Recovers H and the internal part digraphs from a realized digraph and a
/// vertex partition. Throws NotAPartition, or NotAComposition when the arcs
/// between two parts are neither all present nor all absent.
CompositionSpec composition_from_partition(const Digraph& d, const std::vector<VertexList>& parts);

/// Part index of every vertex (-1 for ids outside all parts).
std::vector<int> part_index(std::size_t capacity, const std::vector<VertexList>& parts);

}  // namespace dilink
