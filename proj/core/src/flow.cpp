#include "dilink/flow.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace dilink {

FlowNetwork::FlowNetwork(int nodes) : adjacency_(nodes) {}

int FlowNetwork::add_edge(int from, int to, std::int64_t capacity, std::int64_t cost) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, 0, cost});
  edges_.push_back({from, 0, 0, -cost});
  adjacency_[from].push_back(id);
  adjacency_[to].push_back(id + 1);
  return id;
}

bool FlowNetwork::build_levels(int s, int t) {
  level_.assign(adjacency_.size(), -1);
  std::deque<int> queue{s};
  level_[s] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int id : adjacency_[v]) {
      const Edge& e = edges_[id];
      if (e.capacity - e.flow > 0 && level_[e.to] < 0) {
        level_[e.to] = level_[v] + 1;
        queue.push_back(e.to);
      }
    }
  }
  return level_[t] >= 0;
}

std::int64_t FlowNetwork::push(int v, int t, std::int64_t amount) {
  if (v == t) return amount;
  for (std::size_t& i = next_edge_[v]; i < adjacency_[v].size(); ++i) {
    const int id = adjacency_[v][i];
    Edge& e = edges_[id];
    if (e.capacity - e.flow <= 0 || level_[e.to] != level_[v] + 1) continue;
    std::int64_t pushed = push(e.to, t, std::min(amount, e.capacity - e.flow));
    if (pushed > 0) {
      e.flow += pushed;
      edges_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int s, int t, std::int64_t limit) {
  std::int64_t total = 0;
  while (total < limit && build_levels(s, t)) {
    next_edge_.assign(adjacency_.size(), 0);
    while (total < limit) {
      std::int64_t pushed = push(s, t, limit - total);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

FlowNetwork::CostFlow FlowNetwork::min_cost_flow(int s, int t, std::int64_t limit) {
  // Bellman-Ford (queue based) on the residual graph; networks here are small
  // and the number of augmentations is the number of requested paths.
  CostFlow result;
  const std::size_t n = adjacency_.size();
  const std::int64_t unreached = std::numeric_limits<std::int64_t>::max();
  while (result.flow < limit) {
    std::vector<std::int64_t> dist(n, unreached);
    std::vector<int> via(n, -1);
    std::vector<std::uint8_t> queued(n, 0);
    std::deque<int> queue{s};
    dist[s] = 0;
    queued[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      queued[v] = 0;
      for (int id : adjacency_[v]) {
        const Edge& e = edges_[id];
        if (e.capacity - e.flow <= 0) continue;
        const std::int64_t nd = dist[v] + e.cost;
        if (nd < dist[e.to]) {
          dist[e.to] = nd;
          via[e.to] = id;
          if (!queued[e.to]) {
            queued[e.to] = 1;
            queue.push_back(e.to);
          }
        }
      }
    }
    if (dist[t] == unreached) break;
    std::int64_t amount = limit - result.flow;
    for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
      const Edge& e = edges_[via[v]];
      amount = std::min(amount, e.capacity - e.flow);
    }
    for (int v = t; v != s; v = edges_[via[v] ^ 1].to) {
      edges_[via[v]].flow += amount;
      edges_[via[v] ^ 1].flow -= amount;
    }
    result.flow += amount;
    result.cost += amount * dist[t];
  }
  return result;
}

void FlowNetwork::reset_flow() {
  for (Edge& e : edges_) e.flow = 0;
}

std::vector<std::uint8_t> FlowNetwork::residual_reachable(int s) const {
  std::vector<std::uint8_t> seen(adjacency_.size(), 0);
  std::vector<int> stack{s};
  seen[s] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : adjacency_[v]) {
      const Edge& e = edges_[id];
      if (e.capacity - e.flow > 0 && !seen[e.to]) {
        seen[e.to] = 1;
        stack.push_back(e.to);
      }
    }
  }
  return seen;
}

}  // namespace dilink
