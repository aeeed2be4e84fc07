#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dilink/digraph.hpp"

namespace dilink {

/// Number of independent (v, u)-paths of length 2, i.e. common middle
/// vertices |N+(v) ∩ N-(u) \ {u, v}|. Throws SameVertex.
int two_path_width(const Digraph& d, Vertex v, Vertex u);

/// v dominates u, or two_path_width(d, v, u) >= c.
bool is_c_good(const Digraph& d, Vertex v, Vertex u, int c);

/// A vertex of maximum in-degree in spanning_tournament(d), smallest id on
/// ties. For every c at most 2c vertices fail to be c-good for it.
/// Throws NotSemicomplete, TooFewVertices on the empty digraph.
Vertex nearly_in_dominating_vertex(const Digraph& d);

struct NearlyInDominatingCheck {
  bool holds = true;
  int worst_c = 0;          // the c with the largest excess, 0 when holds
  std::size_t bad_count = 0;
  VertexList bad;           // vertices that are not worst_c-good
};

/// Checks "at most 2c vertices (outside `exclude`, other than u) are not
/// c-good for u" for every c in [1, c_max].
NearlyInDominatingCheck verify_nearly_in_dominating(const Digraph& d, Vertex u, int c_max,
                                                    std::span<const Vertex> exclude = {});

/// Set form: every member of `set` passes against the vertices of d outside
/// the set. Returns the first failing member's check.
NearlyInDominatingCheck verify_nearly_in_dominating_set(const Digraph& d,
                                                        std::span<const Vertex> set, int c_max);

/// u_1..u_m where u_i is the nearly in-dominating vertex of
/// D - (X ∪ Y ∪ {u_1..u_{i-1}}). Throws TooFewVertices, NotSemicomplete.
VertexList nearly_in_dominating_set(const Digraph& d, std::span<const Vertex> x,
                                    std::span<const Vertex> y, std::size_t m);

enum class Direction { Out, In };

/// At least gamma out-neighbours (Out) or in-neighbours (In) of v lie in U.
/// Throws VertexInU.
bool is_gamma_dominator(const Digraph& d, Vertex v, std::span<const Vertex> u, int gamma,
                        Direction direction);

/// Every other vertex reaches v by a path of length <= 2. Throws NotTournament.
bool is_in_king(const Digraph& t, Vertex v);

/// Per-vertex widths towards a fixed target.
struct GoodnessProfile {
  Vertex target = -1;
  std::vector<int> width;   // indexed by vertex id, -1 for the target and deleted ids
  VertexList dominators;    // v -> target
};

GoodnessProfile goodness_profile(const Digraph& d, Vertex u);

}  // namespace dilink
