#include "dilink/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dilink/error.hpp"

namespace dilink {

Digraph::Digraph(std::size_t n)
    : n_(n),
      order_(n),
      matrix_(n * n, 0),
      alive_(n, 1),
      out_(n),
      in_(n) {}

VertexList Digraph::vertices() const {
  VertexList result;
  result.reserve(order_);
  for (std::size_t v = 0; v < n_; ++v) {
    if (alive_[v]) result.push_back(static_cast<Vertex>(v));
  }
  return result;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (Vertex v : out_[u]) result.push_back({static_cast<Vertex>(u), v});
  }
  return result;
}

std::size_t Digraph::min_out_degree() const {
  std::size_t best = 0;
  bool first = true;
  for (std::size_t v = 0; v < n_; ++v) {
    if (!alive_[v]) continue;
    if (first || out_[v].size() < best) best = out_[v].size();
    first = false;
  }
  return best;
}

std::size_t Digraph::min_in_degree() const {
  std::size_t best = 0;
  bool first = true;
  for (std::size_t v = 0; v < n_; ++v) {
    if (!alive_[v]) continue;
    if (first || in_[v].size() < best) best = in_[v].size();
    first = false;
  }
  return best;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.n_ == b.n_ && a.alive_ == b.alive_ && a.matrix_ == b.matrix_;
}

DigraphBuilder::DigraphBuilder(std::size_t n)
    : n_(n), matrix_(n * n, 0), alive_(n, 1) {}

DigraphBuilder::DigraphBuilder(const Digraph& base)
    : n_(base.n_), matrix_(base.matrix_), alive_(base.alive_) {}

void DigraphBuilder::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_ || !alive_[v]) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " is not a live vertex of a digraph on " +
                    std::to_string(n_) + " ids",
                {v});
  }
}

bool DigraphBuilder::contains(Vertex v) const {
  return v >= 0 && static_cast<std::size_t>(v) < n_ && alive_[v] != 0;
}

bool DigraphBuilder::has_arc(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

DigraphBuilder& DigraphBuilder::add_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(u), {u});
  auto& cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
  if (cell) {
    throw Error(ErrorCode::DuplicateArc,
                "arc (" + std::to_string(u) + "," + std::to_string(v) + ") given twice", {u, v});
  }
  cell = 1;
  return *this;
}

bool DigraphBuilder::ensure_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw Error(ErrorCode::SelfLoop, "loop at " + std::to_string(u), {u});
  auto& cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
  if (cell) return false;
  cell = 1;
  return true;
}

void DigraphBuilder::remove_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 0;
}

void DigraphBuilder::remove_vertex(Vertex v) {
  check(v);
  for (std::size_t w = 0; w < n_; ++w) {
    matrix_[static_cast<std::size_t>(v) * n_ + w] = 0;
    matrix_[w * n_ + v] = 0;
  }
  alive_[v] = 0;
}

Digraph DigraphBuilder::build() const {
  Digraph d;
  d.n_ = n_;
  d.matrix_ = matrix_;
  d.alive_ = alive_;
  d.out_.assign(n_, {});
  d.in_.assign(n_, {});
  d.order_ = static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (matrix_[u * n_ + v]) {
        d.out_[u].push_back(static_cast<Vertex>(v));
        d.in_[v].push_back(static_cast<Vertex>(u));
        ++d.arc_count_;
      }
    }
  }
  return d;
}

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
  DigraphBuilder builder(n);
  for (const Arc& a : arcs) builder.add_arc(a.tail, a.head);
  return builder.build();
}

bool is_semicomplete(const Digraph& d) {
  const VertexList vs = d.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!d.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

bool is_tournament(const Digraph& d) {
  const VertexList vs = d.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (d.has_arc(vs[i], vs[j]) == d.has_arc(vs[j], vs[i])) return false;
    }
  }
  return true;
}

namespace {

std::vector<std::uint8_t> reach(const Digraph& d, Vertex source, bool forward) {
  std::vector<std::uint8_t> seen(d.capacity(), 0);
  std::vector<Vertex> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    auto next = forward ? d.out_neighbours(v) : d.in_neighbours(v);
    for (Vertex w : next) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Depth-first enumeration of simple paths with exactly `remaining` more arcs.
bool find_violation(const Digraph& d, Vertex start, Vertex at, int remaining,
                    std::vector<std::uint8_t>& on_path, Vertex& bad_end) {
  if (remaining == 0) {
    if (!d.adjacent(start, at)) {
      bad_end = at;
      return true;
    }
    return false;
  }
  for (Vertex w : d.out_neighbours(at)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    bool found = find_violation(d, start, w, remaining - 1, on_path, bad_end);
    on_path[w] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool is_strong(const Digraph& d) {
  const VertexList vs = d.vertices();
  if (vs.size() <= 1) return true;
  auto fwd = reach(d, vs.front(), true);
  auto bwd = reach(d, vs.front(), false);
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return fwd[v] && bwd[v]; });
}

std::optional<Arc> l_quasi_transitivity_violation(const Digraph& d, int l) {
  if (l < 1) throw Error(ErrorCode::InvalidArgument, "path length l must be at least 1");
  const VertexList vs = d.vertices();
  if (l == 1) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (!d.adjacent(vs[i], vs[j])) return Arc{vs[i], vs[j]};
      }
    }
    return std::nullopt;
  }
  std::vector<std::uint8_t> on_path(d.capacity(), 0);
  for (Vertex u : vs) {
    on_path[u] = 1;
    Vertex bad = -1;
    bool found = find_violation(d, u, u, l, on_path, bad);
    on_path[u] = 0;
    if (found) return Arc{u, bad};
  }
  return std::nullopt;
}

bool is_l_quasi_transitive(const Digraph& d, int l) {
  return !l_quasi_transitivity_violation(d, l).has_value();
}

Digraph spanning_tournament(const Digraph& d) {
  const VertexList vs = d.vertices();
  DigraphBuilder builder(d);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Vertex a = vs[i], b = vs[j];
      bool ab = d.has_arc(a, b), ba = d.has_arc(b, a);
      if (!ab && !ba) {
        throw Error(ErrorCode::NotSemicomplete,
                    "vertices " + std::to_string(a) + " and " + std::to_string(b) +
                        " are non-adjacent",
                    {a, b});
      }
      if (ab && ba) builder.remove_arc(b, a);
    }
  }
  return builder.build();
}

Digraph induced(const Digraph& d, std::span<const Vertex> keep) {
  for (Vertex v : keep) {
    if (!d.contains(v)) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in digraph",
                  {v});
    }
  }
  auto mask = vertex_mask(d.capacity(), keep);
  DigraphBuilder builder(d);
  for (Vertex v : d.vertices()) {
    if (!mask[v]) builder.remove_vertex(v);
  }
  return builder.build();
}

Digraph remove_vertices(const Digraph& d, std::span<const Vertex> drop) {
  DigraphBuilder builder(d);
  for (Vertex v : drop) {
    if (!d.in_range(v)) {
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in digraph",
                  {v});
    }
    if (builder.contains(v)) builder.remove_vertex(v);
  }
  return builder.build();
}

std::vector<int> distances_from(const Digraph& d, Vertex source) {
  std::vector<int> dist(d.capacity(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.out_neighbours(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> distances_to(const Digraph& d, Vertex target) {
  std::vector<int> dist(d.capacity(), -1);
  std::deque<Vertex> queue{target};
  dist[target] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.in_neighbours(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<Path> shortest_path(const Digraph& d, Vertex source, Vertex target) {
  if (!d.contains(source) || !d.contains(target)) return std::nullopt;
  if (source == target) return Path{source};
  std::vector<Vertex> parent(d.capacity(), -1);
  std::vector<std::uint8_t> seen(d.capacity(), 0);
  std::deque<Vertex> queue{source};
  seen[source] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.out_neighbours(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (w == target) {
        Path path{target};
        for (Vertex at = v; at != -1; at = parent[at]) path.push_back(at);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::vector<std::uint8_t> vertex_mask(std::size_t capacity, std::span<const Vertex> vertices) {
  std::vector<std::uint8_t> mask(capacity, 0);
  for (Vertex v : vertices) {
    if (v >= 0 && static_cast<std::size_t>(v) < capacity) mask[v] = 1;
  }
  return mask;
}

}  // namespace dilink
