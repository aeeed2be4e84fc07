#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace dilink {

/// Integer-capacity flow network with Dinic's max-flow and successive
/// shortest-path min-cost flow. Edges are stored in insertion order, so a
/// fixed insertion order gives a fixed result.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInfinite = std::numeric_limits<std::int32_t>::max();

  explicit FlowNetwork(int nodes);

  /// Returns the edge id; the reverse residual edge is id ^ 1.
  int add_edge(int from, int to, std::int64_t capacity, std::int64_t cost = 0);

  /// Pushes up to `limit` units from s to t, on top of any existing flow.
  std::int64_t max_flow(int s, int t, std::int64_t limit = kInfinite);

  struct CostFlow {
    std::int64_t flow = 0;
    std::int64_t cost = 0;
  };

  /// Pushes up to `limit` units along successive cheapest augmenting paths.
  /// Edge costs must be non-negative. The result has minimum cost among all
  /// flows of the same value.
  CostFlow min_cost_flow(int s, int t, std::int64_t limit);

  std::int64_t flow_on(int edge) const { return edges_[edge].flow; }
  int edge_from(int edge) const { return edges_[edge ^ 1].to; }
  int edge_to(int edge) const { return edges_[edge].to; }
  const std::vector<int>& edges_out(int node) const { return adjacency_[node]; }
  bool is_forward(int edge) const { return (edge & 1) == 0; }

  /// Nodes reachable from s in the residual graph (after a max flow this is
  /// the source side of a minimum cut).
  std::vector<std::uint8_t> residual_reachable(int s) const;

  /// Clears all flow, keeping the edges.
  void reset_flow();

  int node_count() const { return static_cast<int>(adjacency_.size()); }

 private:
  struct Edge {
    int to;
    std::int64_t capacity;
    std::int64_t flow;
    std::int64_t cost;
  };

  bool build_levels(int s, int t);
  std::int64_t push(int v, int t, std::int64_t amount);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> next_edge_;
};

}  // namespace dilink
