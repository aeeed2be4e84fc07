#include "dilink/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>

#include "dilink/error.hpp"

namespace dilink {

std::string_view to_string(Clause clause) noexcept {
  switch (clause) {
    case Clause::None: return "None";
    case Clause::PathCount: return "PathCount";
    case Clause::EmptyPath: return "EmptyPath";
    case Clause::VertexRange: return "VertexRange";
    case Clause::Endpoints: return "Endpoints";
    case Clause::RepeatedVertex: return "RepeatedVertex";
    case Clause::ArcMembership: return "ArcMembership";
    case Clause::Disjointness: return "Disjointness";
  }
  return "Unknown";
}

std::string_view to_string(SearchStatus status) noexcept {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Infeasible: return "infeasible";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::string_view to_string(LinkedStatus status) noexcept {
  switch (status) {
    case LinkedStatus::Linked: return "linked";
    case LinkedStatus::NotLinked: return "not_linked";
    case LinkedStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

VerifyReport fail(Clause clause, int index, VertexList vertices, std::string message) {
  VerifyReport r;
  r.passed = false;
  r.clause = clause;
  r.path_index = index;
  r.vertices = std::move(vertices);
  r.message = std::move(message);
  return r;
}

}  // namespace

VerifyReport verify_linkage(const Digraph& d, std::span<const TerminalPair> pairs,
                            const PathSystem& system) {
  if (system.paths.size() != pairs.size()) {
    return fail(Clause::PathCount, -1, {},
                "expected " + std::to_string(pairs.size()) + " paths, got " +
                    std::to_string(system.paths.size()));
  }
  std::vector<int> owner(d.capacity(), -1);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Path& p = system.paths[i];
    const int idx = static_cast<int>(i);
    if (p.empty()) return fail(Clause::EmptyPath, idx, {}, "path is empty");
    for (Vertex v : p) {
      if (!d.contains(v)) {
        return fail(Clause::VertexRange, idx, {v}, "vertex " + std::to_string(v) + " not in digraph");
      }
    }
    if (p.front() != pairs[i].source || p.back() != pairs[i].target) {
      return fail(Clause::Endpoints, idx, {p.front(), p.back()},
                  "path runs " + std::to_string(p.front()) + " -> " + std::to_string(p.back()) +
                      ", expected " + std::to_string(pairs[i].source) + " -> " +
                      std::to_string(pairs[i].target));
    }
    std::vector<Vertex> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      return fail(Clause::RepeatedVertex, idx, {*dup},
                  "vertex " + std::to_string(*dup) + " repeats on the path");
    }
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (!d.has_arc(p[j], p[j + 1])) {
        return fail(Clause::ArcMembership, idx, {p[j], p[j + 1]},
                    "arc (" + std::to_string(p[j]) + "," + std::to_string(p[j + 1]) +
                        ") is not in the digraph");
      }
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Path& p = system.paths[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      const Vertex v = p[j];
      const bool end = (j == 0 || j + 1 == p.size());
      if (owner[v] != -1) {
        const Path& other = system.paths[owner[v]];
        const bool other_end = (v == other.front() || v == other.back());
        if (!(system.shared_endpoints && end && other_end)) {
          return fail(Clause::Disjointness, static_cast<int>(i), {v},
                      "vertex " + std::to_string(v) + " is shared with path " +
                          std::to_string(owner[v]));
        }
      }
      owner[v] = static_cast<int>(i);
    }
  }
  VerifyReport ok;
  ok.passed = true;
  return ok;
}

namespace {

class DisjointPathSearch {
 public:
  DisjointPathSearch(const Digraph& d, std::vector<TerminalPair> pairs, std::size_t budget)
      : d_(d), pairs_(std::move(pairs)), budget_(budget),
        used_(d.capacity(), 0), terminal_(d.capacity(), 0) {
    for (const auto& p : pairs_) {
      terminal_[p.source] = 1;
      terminal_[p.target] = 1;
    }
    memo_enabled_ = d.capacity() <= 64;
  }

  SearchStatus run(std::vector<Path>& out) {
    for (const auto& p : pairs_) used_[p.source] = used_[p.target] = 1;
    paths_.assign(pairs_.size(), {});
    SearchStatus s = solve(0);
    if (s == SearchStatus::Found) out = paths_;
    return s;
  }

  std::size_t expansions() const { return expansions_; }

 private:
  // Can `from` reach `to` through free non-terminal vertices?
  bool reachable(Vertex from, Vertex to) const {
    std::vector<std::uint8_t> seen(d_.capacity(), 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : d_.out_neighbours(v)) {
        if (w == to) return true;
        if (seen[w] || used_[w]) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < d_.capacity(); ++v) {
      if (used_[v]) k |= (std::uint64_t{1} << v);
    }
    return k;
  }

  SearchStatus solve(std::size_t j) {
    if (j == pairs_.size()) return SearchStatus::Found;
    for (std::size_t r = j; r < pairs_.size(); ++r) {
      if (!reachable(pairs_[r].source, pairs_[r].target)) return SearchStatus::Infeasible;
    }
    std::uint64_t state = 0;
    if (memo_enabled_) {
      state = key();
      if (failed_[j].count(state)) return SearchStatus::Infeasible;
    }
    Path path{pairs_[j].source};
    SearchStatus s = extend(j, path);
    if (s == SearchStatus::Infeasible && memo_enabled_) failed_[j].insert(state);
    return s;
  }

  SearchStatus extend(std::size_t j, Path& path) {
    if (++expansions_ > budget_) return SearchStatus::BudgetExceeded;
    const Vertex at = path.back();
    const Vertex target = pairs_[j].target;
    if (d_.has_arc(at, target)) {
      path.push_back(target);
      paths_[j] = path;
      SearchStatus s = solve(j + 1);
      path.pop_back();
      if (s != SearchStatus::Infeasible) return s;
    }
    for (Vertex w : d_.out_neighbours(at)) {
      if (used_[w] || terminal_[w]) continue;
      used_[w] = 1;
      path.push_back(w);
      SearchStatus s = reachable(w, target) ? extend(j, path) : SearchStatus::Infeasible;
      path.pop_back();
      used_[w] = 0;
      if (s != SearchStatus::Infeasible) return s;
    }
    return SearchStatus::Infeasible;
  }

  const Digraph& d_;
  std::vector<TerminalPair> pairs_;
  std::size_t budget_;
  std::size_t expansions_ = 0;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> terminal_;
  std::vector<Path> paths_;
  bool memo_enabled_ = false;
  std::unordered_set<std::uint64_t> failed_[64];
};

void check_pairs(const Digraph& d, std::span<const TerminalPair> pairs) {
  std::vector<std::uint8_t> seen(d.capacity(), 0);
  for (const auto& p : pairs) {
    for (Vertex v : {p.source, p.target}) {
      if (!d.contains(v)) {
        throw Error(ErrorCode::InvalidPairs, "terminal " + std::to_string(v) + " not in digraph",
                    {v});
      }
      if (seen[v]) {
        throw Error(ErrorCode::InvalidPairs, "terminal " + std::to_string(v) + " used twice", {v});
      }
      seen[v] = 1;
    }
  }
  if (pairs.size() > 64) throw Error(ErrorCode::InvalidPairs, "at most 64 pairs supported");
}

}  // namespace

DisjointPathsResult brute_force_disjoint_paths(const Digraph& d,
                                               std::span<const TerminalPair> pairs,
                                               std::size_t budget) {
  check_pairs(d, pairs);
  DisjointPathsResult result;

  // Hardest pairs first: farthest apart in D minus the other terminals, then
  // fewest usable out-neighbours. Correctness does not depend on the order.
  std::vector<std::uint8_t> terminal(d.capacity(), 0);
  for (const auto& p : pairs) terminal[p.source] = terminal[p.target] = 1;
  std::vector<int> distance(pairs.size()), fanout(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::vector<Vertex> others;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (j == i) continue;
      others.push_back(pairs[j].source);
      others.push_back(pairs[j].target);
    }
    Digraph rest = remove_vertices(d, others);
    distance[i] = distances_from(rest, pairs[i].source)[pairs[i].target];
    if (distance[i] < 0) return result;  // Infeasible outright
    fanout[i] = static_cast<int>(rest.out_degree(pairs[i].source));
  }
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (distance[a] != distance[b]) return distance[a] > distance[b];
    return fanout[a] < fanout[b];
  });
  std::vector<TerminalPair> ordered;
  for (std::size_t i : order) ordered.push_back(pairs[i]);

  DisjointPathSearch search(d, ordered, budget);
  std::vector<Path> found;
  result.status = search.run(found);
  result.expansions = search.expansions();
  if (result.status == SearchStatus::Found) {
    std::vector<Path> paths(pairs.size());
    for (std::size_t i = 0; i < order.size(); ++i) paths[order[i]] = std::move(found[i]);
    for (auto& p : paths) result.paths.add(std::move(p));
    result.paths.provenance = "brute-force";
  }
  return result;
}

LinkedResult brute_force_k_linked(const Digraph& d, int k, std::size_t budget, bool collect_all) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  LinkedResult result;
  const VertexList vs = d.vertices();
  const std::size_t kk = static_cast<std::size_t>(k);
  if (vs.size() < 2 * kk) return result;  // too small to be k-linked

  std::size_t spent = 0;
  bool exhausted = false;
  std::vector<std::uint8_t> taken(vs.size(), 0);
  std::vector<TerminalPair> pairs(kk);

  // Targets: every ordered choice of k distinct unused vertices.
  auto assign_targets = [&](auto&& self, std::size_t i) -> bool {
    if (i == kk) {
      ++result.assignments;
      auto r = brute_force_disjoint_paths(d, pairs, budget - spent);
      spent += r.expansions;
      result.expansions = spent;
      if (r.status == SearchStatus::BudgetExceeded) {
        exhausted = true;
        return true;
      }
      if (r.status == SearchStatus::Infeasible) {
        if (result.witness.empty()) result.witness = pairs;
        result.failing.push_back(pairs);
        if (!collect_all) return true;
      }
      return false;
    }
    for (std::size_t t = 0; t < vs.size(); ++t) {
      if (taken[t]) continue;
      taken[t] = 1;
      pairs[i].target = vs[t];
      bool stop = self(self, i + 1);
      taken[t] = 0;
      if (stop) return true;
    }
    return false;
  };
  // Sources: increasing index tuples, so each unordered pair set is seen once.
  auto choose_sources = [&](auto&& self, std::size_t i, std::size_t from) -> bool {
    if (i == kk) return assign_targets(assign_targets, 0);
    for (std::size_t s = from; s < vs.size(); ++s) {
      taken[s] = 1;
      pairs[i].source = vs[s];
      bool stop = self(self, i + 1, s + 1);
      taken[s] = 0;
      if (stop) return true;
    }
    return false;
  };
  choose_sources(choose_sources, 0, 0);

  if (exhausted) {
    result.status = LinkedStatus::BudgetExceeded;
  } else {
    result.status = result.failing.empty() ? LinkedStatus::Linked : LinkedStatus::NotLinked;
  }
  return result;
}

}  // namespace dilink
