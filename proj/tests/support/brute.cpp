#include "brute.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace dilink::brute {

namespace {

std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }

std::uint32_t reach(const Digraph& d, Vertex s, std::uint32_t removed, bool forward) {
  std::uint32_t seen = bit(s);
  std::vector<Vertex> stack{s};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : forward ? d.out_neighbours(v) : d.in_neighbours(v)) {
      if ((removed & bit(w)) || (seen & bit(w))) continue;
      seen |= bit(w);
      stack.push_back(w);
    }
  }
  return seen;
}

std::uint32_t mask_of(const VertexList& vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

}  // namespace

bool strong_without(const Digraph& d, std::uint32_t removed) {
  std::uint32_t alive = 0;
  for (Vertex v : d.vertices()) {
    if (!(removed & bit(v))) alive |= bit(v);
  }
  if (alive == 0) return true;
  const Vertex s = std::countr_zero(alive);
  return reach(d, s, removed, true) == alive && reach(d, s, removed, false) == alive;
}

int kappa(const Digraph& d) {
  const VertexList vs = d.vertices();
  const int n = static_cast<int>(vs.size());
  if (n < 2 || !strong_without(d, 0)) return 0;
  std::uint32_t all = mask_of(vs);
  // Smallest cut: a subset whose removal leaves >= 2 vertices, not strong.
  for (int size = 1; size <= n - 2; ++size) {
    for (std::uint32_t s = all;; s = (s - 1) & all) {
      if (std::popcount(s) == size && !strong_without(d, s)) return size;
      if (s == 0) break;
    }
  }
  return n - 1;
}

std::vector<Path> simple_paths(const Digraph& d, Vertex x, Vertex y, std::uint32_t blocked) {
  std::vector<Path> out;
  Path current{x};
  std::uint32_t used = bit(x);
  auto go = [&](auto& self) -> void {
    Vertex at = current.back();
    if (at == y) {
      out.push_back(current);
      return;
    }
    for (Vertex w : d.out_neighbours(at)) {
      if ((used & bit(w)) || (blocked & bit(w))) continue;
      used |= bit(w);
      current.push_back(w);
      self(self);
      current.pop_back();
      used &= ~bit(w);
    }
  };
  if (!(blocked & bit(x))) go(go);
  return out;
}

int local_connectivity(const Digraph& d, Vertex x, Vertex y) {
  std::vector<std::uint32_t> interiors;
  bool direct = false;
  for (const Path& p : simple_paths(d, x, y)) {
    std::uint32_t m = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) m |= bit(p[i]);
    if (m == 0) {
      direct = true;
    } else {
      interiors.push_back(m);
    }
  }
  std::sort(interiors.begin(), interiors.end());
  interiors.erase(std::unique(interiors.begin(), interiors.end()), interiors.end());
  // best[used] = most pairwise disjoint interiors inside `used`.
  const std::uint32_t full = (std::uint32_t{1} << d.capacity()) - 1;
  std::vector<int> best(full + 1, 0);
  for (std::uint32_t used = 1; used <= full; ++used) {
    for (std::uint32_t m : interiors) {
      if ((m & used) == m) best[used] = std::max(best[used], 1 + best[used & ~m]);
    }
  }
  return best[full] + (direct ? 1 : 0);
}

std::optional<int> min_vertex_system(const Digraph& d, const VertexList& starts,
                                     const VertexList& targets, const VertexList& avoid) {
  const std::uint32_t blocked = mask_of(avoid);
  // Candidate vertex sets per target.
  std::vector<std::vector<std::uint32_t>> options(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (Vertex s : starts) {
      for (const Path& p : simple_paths(d, s, targets[i], blocked)) {
        options[i].push_back(mask_of(p));
      }
    }
    std::sort(options[i].begin(), options[i].end());
    options[i].erase(std::unique(options[i].begin(), options[i].end()), options[i].end());
  }
  int best = std::numeric_limits<int>::max();
  auto go = [&](auto& self, std::size_t i, std::uint32_t used, int total) -> void {
    if (total >= best) return;
    if (i == targets.size()) {
      best = total;
      return;
    }
    for (std::uint32_t m : options[i]) {
      if (m & used) continue;
      self(self, i + 1, used | m, total + std::popcount(m));
    }
  };
  go(go, 0, 0, 0);
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int max_disjoint_set_paths(const Digraph& d, const VertexList& from, const VertexList& to,
                           const VertexList& avoid) {
  const std::uint32_t blocked = mask_of(avoid);
  std::vector<std::vector<std::uint32_t>> options(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (Vertex t : to) {
      // Paths may not pass through other sources or targets.
      std::uint32_t others = (mask_of(from) | mask_of(to)) & ~bit(from[i]) & ~bit(t);
      for (const Path& p : simple_paths(d, from[i], t, blocked | others)) {
        options[i].push_back(mask_of(p));
      }
    }
  }
  int best = 0;
  auto go = [&](auto& self, std::size_t i, std::uint32_t used, int count) -> void {
    best = std::max(best, count);
    if (i == from.size() || count + static_cast<int>(from.size() - i) <= best) return;
    for (std::uint32_t m : options[i]) {
      if (!(m & used)) self(self, i + 1, used | m, count + 1);
    }
    self(self, i + 1, used, count);
  };
  go(go, 0, 0, 0);
  return best;
}

int two_path_middles(const Digraph& d, Vertex v, Vertex u) {
  int count = 0;
  for (Vertex m : d.vertices()) {
    if (m != u && m != v && d.has_arc(v, m) && d.has_arc(m, u)) ++count;
  }
  return count;
}

bool l_quasi_transitive(const Digraph& d, int l) {
  if (l == 1) return is_semicomplete(d);
  for (Vertex s : d.vertices()) {
    Path current{s};
    bool ok = true;
    auto go = [&](auto& self) -> void {
      if (!ok) return;
      if (static_cast<int>(current.size()) == l + 1) {
        if (!d.adjacent(current.front(), current.back())) ok = false;
        return;
      }
      for (Vertex w : d.out_neighbours(current.back())) {
        if (std::find(current.begin(), current.end(), w) != current.end()) continue;
        current.push_back(w);
        self(self);
        current.pop_back();
      }
    };
    go(go);
    if (!ok) return false;
  }
  return true;
}

bool is_minimal_path(const Digraph& d, const Path& p) {
  const std::uint32_t inside = mask_of(p);
  std::uint32_t outside = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(d.capacity()); ++v) {
    if (!(inside & bit(v))) outside |= bit(v);
  }
  for (const Path& q : simple_paths(d, p.front(), p.back(), outside)) {
    if (q.size() < p.size()) return false;
  }
  return true;
}

long long threshold_by_counting(int k, int l) {
  const int m = 9 * k - 6;
  long long pairs = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) ++pairs;
  }
  long long total = 0;
  for (int i = 0; i < l + 2; ++i) total += pairs;
  for (int i = 0; i < k; ++i) total += 2 * l + 5 + 9;
  return total;
}

}  // namespace dilink::brute
