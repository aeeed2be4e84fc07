#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/path_system.hpp"
#include "dilink/solve_report.hpp"

namespace dilink {

/// C(9k-6, 2)(l+2) + (2l+5)k + 9k, the pool size that makes every
/// replacement step succeed in the worst case. Throws InvalidArgument unless
/// k >= 1 and l >= 2.
std::int64_t available_path_threshold(int k, int l);

/// Independent paths between u and v, grouped by direction.
struct ShortPathFamily {
  std::vector<Path> forward;   // u -> v
  std::vector<Path> backward;  // v -> u
  std::size_t distance_checks = 0;

  std::size_t total() const noexcept { return forward.size() + backward.size(); }
};

/// Greedy extraction: repeatedly take a shortest u->v or v->u path of at
/// most l+1 arcs in what is left (ties go forward), record it and delete its
/// interior (a direct arc is used once). Stops after `limit` paths or when
/// neither direction has a short path.
///
/// With `check_distances`, whenever the leftover digraph has a u->v path
/// with d(u,v) >= l, checks d(v,u) <= l+1 (and symmetrically), which every
/// l-quasi-transitive digraph satisfies; a failure throws
/// NotLQuasiTransitive with {u, v}. Only non-adjacent pairs are checked.
ShortPathFamily independent_short_paths(const Digraph& d, Vertex u, Vertex v, int l,
                                        std::size_t limit, bool check_distances = false);

/// Same extraction restricted to one direction.
std::vector<Path> independent_short_paths_one_way(const Digraph& d, Vertex u, Vertex v, int l,
                                                  std::size_t limit);

struct NewArc {
  Arc arc;
  std::vector<Path> available;  // independent arc.tail -> arc.head paths in D - (X ∪ Y)
};

/// Semicomplete digraph on V(D) that linkage paths are planned in.
struct AuxiliaryDigraph {
  Digraph augmented;
  std::vector<NewArc> new_arcs;     // sorted by arc
  std::vector<Arc> terminal_arcs;   // into X and out of Y; never usable by a linkage
  std::size_t distance_checks = 0;

  /// Pool of a new arc, or nullptr for arcs of D.
  const NewArc* find(Vertex tail, Vertex head) const;
};

/// For every non-adjacent pair of D - (X ∪ Y) extracts up to 2*threshold
/// independent short paths, keeps the richer direction if it reaches
/// `threshold` (retrying each direction on its own otherwise) and adds the
/// corresponding new arc. Then adds the terminal arcs and checks that the
/// result is semicomplete.
///
/// Throws NotStrong, NotLQuasiTransitive, ThresholdUnreachable (witness
/// {u, v}), ConstructionFailed when a recorded pool fails revalidation.
AuxiliaryDigraph build_auxiliary(const Digraph& d, std::span<const Vertex> x,
                                 std::span<const Vertex> y, int l, std::int64_t threshold);

/// Disjoint paths of at most `max_arcs` arcs linking the pairs, by
/// exhaustive backtracking (shortest candidates first).
std::optional<PathSystem> short_linkage(const Digraph& d, std::span<const TerminalPair> pairs,
                                        int max_arcs = 3);

/// True iff for every bijection U1 -> U2 the matched pairs have disjoint
/// linking paths of length <= 3 in T. Throws SizeMismatch, SetOverlap.
bool verify_short_anchor(const Digraph& t, std::span<const Vertex> u1,
                         std::span<const Vertex> u2);

struct AnchorSearchOptions {
  std::size_t budget = 200'000;    // candidate (U1, U2) pairs examined
  bool allow_small = false;        // search even when |T| < 9k-6
};

struct AnchorPair {
  VertexList u1;
  VertexList u2;
};

struct AnchorSearchResult {
  std::optional<AnchorPair> pair;
  std::size_t examined = 0;
  bool budget_exceeded = false;
};

/// Disjoint k-sets U1, U2 of T such that U1 short anchors U2: first the k
/// largest out-degrees against the k largest in-degrees, then every choice
/// of sets. Throws PreconditionViolated when |T| < 9k-6 unless allowed.
AnchorSearchResult find_short_anchor_pair(const Digraph& t, int k,
                                          const AnchorSearchOptions& options = {});

struct LqtOptions {
  std::int64_t threshold = 0;          // 0 selects available_path_threshold(k, l)
  std::size_t anchor_budget = 200'000;
  bool audit = true;                   // strong and l-quasi-transitive
};

/// Links x_i to y_i in a strong l-quasi-transitive digraph through the
/// auxiliary semicomplete digraph, replacing new arcs by available paths.
/// The connectivity bound 81k^2(l+2)^2 is recorded in the audit but not
/// enforced. Throws InvalidPairs, InvalidArgument (l < 2).
SolveReport solve_lqt(const Digraph& d, std::span<const TerminalPair> pairs, int l,
                      const LqtOptions& options = {});

}  // namespace dilink
