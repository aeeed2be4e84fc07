#include "dilink/dominators.hpp"

#include <string>

#include "dilink/error.hpp"

namespace dilink {

namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (!d.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), {v});
}

}  // namespace

int two_path_width(const Digraph& d, Vertex v, Vertex u) {
  check_vertex(d, v);
  check_vertex(d, u);
  if (u == v) throw Error(ErrorCode::SameVertex, "u and v coincide", {u});
  int width = 0;
  for (Vertex w : d.out_neighbours(v)) {
    if (w != u && d.has_arc(w, u)) ++width;
  }
  return width;
}

bool is_c_good(const Digraph& d, Vertex v, Vertex u, int c) {
  if (u == v) throw Error(ErrorCode::SameVertex, "u and v coincide", {u});
  return d.has_arc(v, u) || two_path_width(d, v, u) >= c;
}

Vertex nearly_in_dominating_vertex(const Digraph& d) {
  if (d.order() == 0) throw Error(ErrorCode::TooFewVertices, "empty digraph");
  // In-degree in the spanning tournament: a 2-cycle {a, b} with a < b counts
  // for b only.
  Vertex best = -1;
  std::size_t best_in = 0;
  for (Vertex v : d.vertices()) {
    std::size_t in = 0;
    for (Vertex w : d.in_neighbours(v)) {
      if (!d.has_arc(v, w) || w < v) ++in;
    }
    std::size_t adjacent_count = d.in_degree(v) + d.out_degree(v);
    for (Vertex w : d.out_neighbours(v)) {
      if (d.has_arc(w, v)) --adjacent_count;
    }
    if (adjacent_count + 1 != d.order()) {
      throw Error(ErrorCode::NotSemicomplete,
                  "vertex " + std::to_string(v) + " has a non-neighbour", {v});
    }
    if (best < 0 || in > best_in) {
      best = v;
      best_in = in;
    }
  }
  return best;
}

NearlyInDominatingCheck verify_nearly_in_dominating(const Digraph& d, Vertex u, int c_max,
                                                    std::span<const Vertex> exclude) {
  check_vertex(d, u);
  auto skip = vertex_mask(d.capacity(), exclude);
  std::vector<Vertex> candidates;
  std::vector<int> widths;
  for (Vertex v : d.vertices()) {
    if (v == u || skip[v] || d.has_arc(v, u)) continue;
    candidates.push_back(v);
    widths.push_back(two_path_width(d, v, u));
  }
  NearlyInDominatingCheck result;
  long long worst_excess = 0;
  for (int c = 1; c <= c_max; ++c) {
    std::size_t bad = 0;
    for (int w : widths) bad += w < c ? 1 : 0;
    long long excess = static_cast<long long>(bad) - 2LL * c;
    if (excess > worst_excess) {
      worst_excess = excess;
      result.holds = false;
      result.worst_c = c;
      result.bad_count = bad;
    }
  }
  if (!result.holds) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (widths[i] < result.worst_c) result.bad.push_back(candidates[i]);
    }
  }
  return result;
}

NearlyInDominatingCheck verify_nearly_in_dominating_set(const Digraph& d,
                                                        std::span<const Vertex> set, int c_max) {
  for (Vertex u : set) {
    auto check = verify_nearly_in_dominating(d, u, c_max, set);
    if (!check.holds) return check;
  }
  return {};
}

VertexList nearly_in_dominating_set(const Digraph& d, std::span<const Vertex> x,
                                    std::span<const Vertex> y, std::size_t m) {
  DigraphBuilder rest(d);
  for (auto set : {x, y}) {
    for (Vertex v : set) {
      check_vertex(d, v);
      rest.remove_vertex(v);
    }
  }
  Digraph current = rest.build();
  if (current.order() < m) {
    throw Error(ErrorCode::TooFewVertices, "need " + std::to_string(m) + " vertices outside X ∪ Y, have " +
                                               std::to_string(current.order()));
  }
  VertexList result;
  for (std::size_t i = 0; i < m; ++i) {
    Vertex u = nearly_in_dominating_vertex(current);
    result.push_back(u);
    rest.remove_vertex(u);
    current = rest.build();
  }
  return result;
}

bool is_gamma_dominator(const Digraph& d, Vertex v, std::span<const Vertex> u, int gamma,
                        Direction direction) {
  check_vertex(d, v);
  int count = 0;
  for (Vertex w : u) {
    if (w == v) throw Error(ErrorCode::VertexInU, "vertex " + std::to_string(v) + " lies in U", {v});
    bool hit = direction == Direction::Out ? d.has_arc(v, w) : d.has_arc(w, v);
    if (hit) ++count;
  }
  return count >= gamma;
}

bool is_in_king(const Digraph& t, Vertex v) {
  if (!is_tournament(t)) throw Error(ErrorCode::NotTournament, "input is not a tournament");
  check_vertex(t, v);
  auto dist = distances_to(t, v);
  for (Vertex w : t.vertices()) {
    if (dist[w] < 0 || dist[w] > 2) return false;
  }
  return true;
}

GoodnessProfile goodness_profile(const Digraph& d, Vertex u) {
  check_vertex(d, u);
  GoodnessProfile profile;
  profile.target = u;
  profile.width.assign(d.capacity(), -1);
  for (Vertex v : d.vertices()) {
    if (v == u) continue;
    profile.width[v] = two_path_width(d, v, u);
    if (d.has_arc(v, u)) profile.dominators.push_back(v);
  }
  return profile;
}

}  // namespace dilink
