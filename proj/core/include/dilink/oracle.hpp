#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dilink/digraph.hpp"
#include "dilink/path_system.hpp"

namespace dilink {

enum class Clause {
  None,
  PathCount,
  EmptyPath,
  VertexRange,
  Endpoints,
  RepeatedVertex,
  ArcMembership,
  Disjointness,
};

std::string_view to_string(Clause clause) noexcept;

/// Result of certifying a path system. On failure `clause` is the first
/// violated requirement and `vertices` pinpoints it (the offending arc, the
/// shared vertex, ...).
struct VerifyReport {
  bool passed = false;
  Clause clause = Clause::None;
  int path_index = -1;
  VertexList vertices;
  std::string message;
};

/// Passes iff path i runs pairs[i].source -> pairs[i].target along arcs of
/// `d` and the paths are pairwise vertex-disjoint.
VerifyReport verify_linkage(const Digraph& d, std::span<const TerminalPair> pairs,
                            const PathSystem& system);

enum class SearchStatus { Found, Infeasible, BudgetExceeded };

std::string_view to_string(SearchStatus status) noexcept;

struct DisjointPathsResult {
  SearchStatus status = SearchStatus::Infeasible;
  PathSystem paths;  // filled when Found, in the order of the input pairs
  std::size_t expansions = 0;
};

/// Exhaustive backtracking for vertex-disjoint (source_i, target_i)-paths.
/// `budget` bounds the number of search-node expansions. Throws InvalidPairs
/// when terminals repeat or are not vertices of `d`.
DisjointPathsResult brute_force_disjoint_paths(const Digraph& d,
                                               std::span<const TerminalPair> pairs,
                                               std::size_t budget);

enum class LinkedStatus { Linked, NotLinked, BudgetExceeded };

std::string_view to_string(LinkedStatus status) noexcept;

struct LinkedResult {
  LinkedStatus status = LinkedStatus::NotLinked;
  std::vector<TerminalPair> witness;                  // first failing assignment
  std::vector<std::vector<TerminalPair>> failing;     // all of them, if collected
  std::size_t assignments = 0;
  std::size_t expansions = 0;
};

/// Decides k-linkedness by trying every assignment of 2k distinct terminals
/// (assignments differing only in pair order are tried once, pairs sorted by
/// source). `budget` is the total expansion budget over all searches.
LinkedResult brute_force_k_linked(const Digraph& d, int k, std::size_t budget,
                                  bool collect_all = false);

}  // namespace dilink
