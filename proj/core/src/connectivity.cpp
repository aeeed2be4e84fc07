#include "dilink/connectivity.hpp"

#include <algorithm>
#include <string>

#include "dilink/error.hpp"
#include "dilink/flow.hpp"

namespace dilink {

namespace {

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

// Vertex-split network: v_in -> v_out carries the vertex capacity, every arc
// u -> w becomes u_out -> w_in. Blocked vertices get capacity 0 so that they
// still show up on the boundary of a minimum cut.
struct SplitNetwork {
  FlowNetwork net;
  std::vector<int> vertex_edge;  // edge id of v_in -> v_out, -1 if absent
  int source = -1;
  int sink = -1;

  SplitNetwork(const Digraph& d, const std::vector<std::uint8_t>& blocked, bool with_terminals,
               std::int64_t vertex_cost)
      : net(static_cast<int>(2 * d.capacity() + 2)), vertex_edge(d.capacity(), -1) {
    for (Vertex v : d.vertices()) {
      vertex_edge[v] = net.add_edge(in_node(v), out_node(v), blocked[v] ? 0 : 1, vertex_cost);
    }
    for (const Arc& a : d.arcs()) {
      net.add_edge(out_node(a.tail), in_node(a.head), FlowNetwork::kInfinite, 0);
    }
    if (with_terminals) {
      source = static_cast<int>(2 * d.capacity());
      sink = source + 1;
    }
  }

  // Vertices whose split edge crosses the residual cut.
  VertexList cut(const Digraph& d) const {
    auto side = net.residual_reachable(source);
    VertexList result;
    for (Vertex v : d.vertices()) {
      if (side[in_node(v)] && !side[out_node(v)]) result.push_back(v);
    }
    return result;
  }

  // Follows flow from `start` until a vertex with a positive sink edge.
  Path trace(Vertex start, const std::vector<std::uint8_t>& is_target) const {
    Path path{start};
    Vertex at = start;
    while (!is_target[at]) {
      Vertex next = -1;
      for (int id : net.edges_out(out_node(at))) {
        if (!net.is_forward(id) || net.flow_on(id) <= 0) continue;
        int to = net.edge_to(id);
        if (to == sink) continue;
        next = to / 2;
        break;
      }
      if (next < 0) throw Error(ErrorCode::ConstructionFailed, "broken flow decomposition", {at});
      path.push_back(next);
      at = next;
    }
    return path;
  }
};

void check_disjoint(std::size_t capacity, std::initializer_list<std::span<const Vertex>> sets) {
  std::vector<std::uint8_t> seen(capacity, 0);
  for (auto set : sets) {
    for (Vertex v : set) {
      if (v < 0 || static_cast<std::size_t>(v) >= capacity) {
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), {v});
      }
      if (seen[v]) {
        throw Error(ErrorCode::SetOverlap, "vertex " + std::to_string(v) + " occurs twice", {v});
      }
      seen[v] = 1;
    }
  }
}

// Reusable network for repeated (x, y) local connectivity queries between
// non-adjacent vertices: source x_out, sink y_in.
class PairFlow {
 public:
  explicit PairFlow(const Digraph& d)
      : split_(d, std::vector<std::uint8_t>(d.capacity(), 0), false, 0) {}

  int connectivity(Vertex x, Vertex y, int limit) {
    split_.net.reset_flow();
    return static_cast<int>(split_.net.max_flow(out_node(x), in_node(y), limit));
  }

 private:
  SplitNetwork split_;
};

}  // namespace

int local_connectivity(const Digraph& d, Vertex x, Vertex y) {
  if (!d.contains(x) || !d.contains(y)) {
    throw Error(ErrorCode::VertexOutOfRange, "terminal not in digraph", {x, y});
  }
  if (x == y) throw Error(ErrorCode::SameVertex, "x and y coincide", {x});
  if (d.has_arc(x, y)) {
    DigraphBuilder b(d);
    b.remove_arc(x, y);
    Digraph rest = b.build();
    PairFlow flow(rest);
    return 1 + flow.connectivity(x, y, static_cast<int>(d.order()));
  }
  PairFlow flow(d);
  return flow.connectivity(x, y, static_cast<int>(d.order()));
}

int kappa(const Digraph& d) {
  const VertexList vs = d.vertices();
  if (vs.size() < 2) return 0;
  if (!is_strong(d)) return 0;
  int best = static_cast<int>(std::min({vs.size() - 1, d.min_out_degree(), d.min_in_degree()}));
  PairFlow flow(d);
  // A minimum separator misses one of any best+1 vertices; scanning pairs
  // through the first best+1 vertices therefore finds it.
  for (std::size_t i = 0; i < vs.size() && static_cast<int>(i) <= best; ++i) {
    const Vertex v = vs[i];
    for (Vertex w : vs) {
      if (w == v) continue;
      if (!d.has_arc(v, w)) best = std::min(best, flow.connectivity(v, w, best));
      if (!d.has_arc(w, v)) best = std::min(best, flow.connectivity(w, v, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

bool is_k_strong(const Digraph& d, int k) {
  if (k <= 0) return true;
  const VertexList vs = d.vertices();
  if (vs.size() < static_cast<std::size_t>(k) + 1) return false;
  if (!is_strong(d)) return false;
  if (k == 1) return true;
  if (d.min_out_degree() < static_cast<std::size_t>(k) ||
      d.min_in_degree() < static_cast<std::size_t>(k)) {
    return false;
  }
  PairFlow flow(d);
  for (int i = 0; i < k; ++i) {
    const Vertex v = vs[i];
    for (Vertex w : vs) {
      if (w == v) continue;
      if (!d.has_arc(v, w) && flow.connectivity(v, w, k) < k) return false;
      if (!d.has_arc(w, v) && flow.connectivity(w, v, k) < k) return false;
    }
  }
  return true;
}

MengerResult menger_set_paths(const Digraph& d, std::span<const Vertex> from,
                              std::span<const Vertex> to, std::span<const Vertex> avoid) {
  check_disjoint(d.capacity(), {from, to, avoid});
  if (from.size() != to.size()) {
    throw Error(ErrorCode::SizeMismatch, "|X| = " + std::to_string(from.size()) +
                                             " but |Y| = " + std::to_string(to.size()));
  }
  for (auto set : {from, to}) {
    for (Vertex v : set) {
      if (!d.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), {v});
    }
  }
  SplitNetwork split(d, vertex_mask(d.capacity(), avoid), true, 0);
  for (Vertex x : from) split.net.add_edge(split.source, in_node(x), FlowNetwork::kInfinite);
  for (Vertex y : to) split.net.add_edge(out_node(y), split.sink, FlowNetwork::kInfinite);

  MengerResult result;
  const auto want = static_cast<std::int64_t>(from.size());
  const std::int64_t got = split.net.max_flow(split.source, split.sink, want);
  if (got < want) {
    result.separator = split.cut(d);
    return result;
  }
  result.feasible = true;
  auto is_target = vertex_mask(d.capacity(), to);
  for (Vertex x : from) result.paths.add(split.trace(x, is_target));
  result.paths.provenance = "menger";
  result.total_vertices = static_cast<std::int64_t>(result.paths.vertex_count());
  return result;
}

MengerResult min_vertex_menger(const Digraph& d, std::span<const Vertex> starts,
                               std::span<const Vertex> targets, std::span<const Vertex> avoid) {
  check_disjoint(d.capacity(), {starts, targets, avoid});
  for (auto set : {starts, targets}) {
    for (Vertex v : set) {
      if (!d.contains(v)) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v), {v});
    }
  }
  SplitNetwork split(d, vertex_mask(d.capacity(), avoid), true, 1);
  std::vector<int> start_edge;
  for (Vertex u : starts) start_edge.push_back(split.net.add_edge(split.source, in_node(u), 1));
  for (Vertex y : targets) split.net.add_edge(out_node(y), split.sink, 1);

  MengerResult result;
  const auto want = static_cast<std::int64_t>(targets.size());
  auto flow = split.net.min_cost_flow(split.source, split.sink, want);
  if (flow.flow < want) {
    result.separator = split.cut(d);
    return result;
  }
  result.feasible = true;
  result.total_vertices = flow.cost;
  auto is_target = vertex_mask(d.capacity(), targets);
  std::vector<Path> by_target(d.capacity());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (split.net.flow_on(start_edge[i]) <= 0) continue;
    Path p = split.trace(starts[i], is_target);
    by_target[p.back()] = std::move(p);
  }
  for (Vertex y : targets) result.paths.add(std::move(by_target[y]));
  result.paths.provenance = "min-vertex-menger";
  return result;
}

}  // namespace dilink
