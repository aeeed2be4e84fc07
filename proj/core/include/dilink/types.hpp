#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace dilink {

// Vertices are stable integer ids 0..n-1. Deleting a vertex never renumbers
// the survivors, so ids can be passed freely between nested subdigraphs.
using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// (source, target) of one linkage request.
struct TerminalPair {
  Vertex source = 0;
  Vertex target = 0;

  friend auto operator<=>(const TerminalPair&, const TerminalPair&) = default;
};

using Path = std::vector<Vertex>;
using VertexList = std::vector<Vertex>;

}  // namespace dilink
