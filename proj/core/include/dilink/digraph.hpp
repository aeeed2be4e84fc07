#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dilink/types.hpp"

namespace dilink {

/// Simple digraph on stable vertex ids 0..capacity()-1.
///
/// Adjacency is stored twice: a dense byte matrix for O(1) arc queries (most
/// inputs here are semicomplete, so the matrix is close to full anyway) and
/// sorted out/in lists for iteration. Vertices can be logically deleted; a
/// deleted vertex keeps its id but has no arcs and is skipped by vertices().
///
/// Values are immutable once built and safe to share between threads.
class Digraph {
 public:
  Digraph() = default;

  /// Arcless digraph on n live vertices.
  explicit Digraph(std::size_t n);

  std::size_t capacity() const noexcept { return n_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arc_count_; }

  bool in_range(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < n_;
  }
  bool contains(Vertex v) const noexcept { return in_range(v) && alive_[v] != 0; }

  bool has_arc(Vertex u, Vertex v) const noexcept {
    return in_range(u) && in_range(v) && matrix_[index(u, v)] != 0;
  }
  bool adjacent(Vertex u, Vertex v) const noexcept {
    return has_arc(u, v) || has_arc(v, u);
  }

  std::span<const Vertex> out_neighbours(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  /// Live vertices in increasing id order.
  VertexList vertices() const;

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  /// Minimum out-/in-degree over live vertices (0 for the empty digraph).
  std::size_t min_out_degree() const;
  std::size_t min_in_degree() const;

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  friend class DigraphBuilder;

  std::size_t index(Vertex u, Vertex v) const noexcept {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::size_t order_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint8_t> alive_;
  std::vector<VertexList> out_;
  std::vector<VertexList> in_;
};

/// Single-owner mutable staging area for a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n);

  /// Starts from an existing digraph, keeping its deleted vertices deleted.
  explicit DigraphBuilder(const Digraph& base);

  std::size_t capacity() const noexcept { return n_; }
  bool has_arc(Vertex u, Vertex v) const;
  bool contains(Vertex v) const;

  /// Throws SelfLoop, DuplicateArc or VertexOutOfRange.
  DigraphBuilder& add_arc(Vertex u, Vertex v);

  /// Adds u->v unless present; returns whether it was added.
  bool ensure_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  /// Logical deletion: drops incident arcs, keeps the id.
  void remove_vertex(Vertex v);

  Digraph build() const;

 private:
  void check(Vertex v) const;

  std::size_t n_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint8_t> alive_;
};

Digraph build_digraph(std::size_t n, std::span<const Arc> arcs);

bool is_semicomplete(const Digraph& d);
bool is_tournament(const Digraph& d);
bool is_strong(const Digraph& d);

/// True iff every pair joined by a path with exactly `l` arcs is adjacent.
/// For l = 1 this is semicompleteness by convention.
bool is_l_quasi_transitive(const Digraph& d, int l);

/// A pair (u, v) joined by an l-arc path but non-adjacent, if any.
std::optional<Arc> l_quasi_transitivity_violation(const Digraph& d, int l);

/// One arc per pair; a 2-cycle keeps the arc from the smaller id.
/// Throws NotSemicomplete.
Digraph spanning_tournament(const Digraph& d);

/// Induced subdigraph on `keep`; all other vertices are deleted.
Digraph induced(const Digraph& d, std::span<const Vertex> keep);

/// D minus `drop`. Ids are preserved.
Digraph remove_vertices(const Digraph& d, std::span<const Vertex> drop);

/// BFS distances from `source` (-1 when unreachable).
std::vector<int> distances_from(const Digraph& d, Vertex source);

/// BFS distances to `target` along reversed arcs (-1 when unreachable).
std::vector<int> distances_to(const Digraph& d, Vertex target);

/// A shortest (source, target)-path, smallest ids preferred on ties.
std::optional<Path> shortest_path(const Digraph& d, Vertex source, Vertex target);

/// Byte mask of length d.capacity() with the listed vertices set.
std::vector<std::uint8_t> vertex_mask(std::size_t capacity, std::span<const Vertex> vertices);

}  // namespace dilink
