#pragma once

#include <span>
#include <string>
#include <vector>

#include "dilink/types.hpp"

namespace dilink {

/// Ordered collection of paths, each a vertex sequence. pairs[i] is the
/// (source, target) role of paths[i]. Nothing here is trusted: use
/// verify_linkage() to certify a system against a digraph.
struct PathSystem {
  std::vector<Path> paths;
  std::vector<TerminalPair> pairs;
  std::string provenance;
  // Set when paths may share their end vertices (e.g. anchor pieces before
  // concatenation).
  bool shared_endpoints = false;

  std::size_t size() const noexcept { return paths.size(); }
  bool empty() const noexcept { return paths.empty(); }

  void add(Path p) {
    pairs.push_back({p.front(), p.back()});
    paths.push_back(std::move(p));
  }

  VertexList initial_vertices() const;
  VertexList terminal_vertices() const;
  /// All vertices that are neither initial nor terminal on their path.
  VertexList interior_vertices() const;
  VertexList all_vertices() const;
  std::size_t vertex_count() const;
};

/// a followed by b, where b must start at the last vertex of a.
Path concatenate(const Path& a, const Path& b);

VertexList sources_of(std::span<const TerminalPair> pairs);
VertexList targets_of(std::span<const TerminalPair> pairs);

}  // namespace dilink
