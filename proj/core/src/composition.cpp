#include "dilink/composition.hpp"

#include <string>

#include "dilink/error.hpp"

namespace dilink {

std::vector<VertexList> CompositionSpec::part_sets() const {
  std::vector<VertexList> sets;
  sets.reserve(parts.size());
  for (const Part& p : parts) sets.push_back(p.vertices);
  return sets;
}

std::vector<int> part_index(std::size_t capacity, const std::vector<VertexList>& parts) {
  std::vector<int> index(capacity, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (v < 0 || static_cast<std::size_t>(v) >= capacity) {
        throw Error(ErrorCode::NotAPartition, "part vertex " + std::to_string(v) + " out of range",
                    {v});
      }
      if (index[v] != -1) {
        throw Error(ErrorCode::PartOverlap,
                    "vertex " + std::to_string(v) + " appears in more than one part", {v});
      }
      index[v] = static_cast<int>(i);
    }
  }
  return index;
}

Digraph compose(const CompositionSpec& spec) {
  const std::size_t h = spec.parts.size();
  if (h < 2 || spec.outer.capacity() != h || spec.outer.order() != h) {
    throw Error(ErrorCode::ArityMismatch, "outer digraph has " +
                                              std::to_string(spec.outer.order()) +
                                              " vertices but " + std::to_string(h) +
                                              " parts were given (need h >= 2)");
  }
  std::size_t total = 0;
  for (const Part& p : spec.parts) {
    if (p.inner.capacity() != p.vertices.size() || p.inner.order() != p.vertices.size()) {
      throw Error(ErrorCode::ArityMismatch, "part digraph order differs from its vertex list");
    }
    total += p.vertices.size();
  }
  std::vector<int> owner;
  try {
    owner = part_index(total, spec.part_sets());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PartOverlap) throw;
    throw Error(ErrorCode::NotAPartition, "part ids must be exactly 0.." +
                                              std::to_string(total == 0 ? 0 : total - 1),
                e.witness());
  }

  DigraphBuilder builder(total);
  for (const Part& p : spec.parts) {
    for (const Arc& a : p.inner.arcs()) builder.add_arc(p.vertices[a.tail], p.vertices[a.head]);
  }
  for (const Arc& a : spec.outer.arcs()) {
    for (Vertex s : spec.parts[a.tail].vertices) {
      for (Vertex t : spec.parts[a.head].vertices) builder.add_arc(s, t);
    }
  }
  return builder.build();
}

CompositionSpec composition_from_partition(const Digraph& d,
                                           const std::vector<VertexList>& parts) {
  std::vector<int> owner = part_index(d.capacity(), parts);
  for (Vertex v : d.vertices()) {
    if (owner[v] == -1) {
      throw Error(ErrorCode::NotAPartition, "vertex " + std::to_string(v) + " is in no part",
                  {v});
    }
  }
  for (const VertexList& p : parts) {
    if (p.empty()) throw Error(ErrorCode::NotAPartition, "empty part");
    for (Vertex v : p) {
      if (!d.contains(v)) {
        throw Error(ErrorCode::NotAPartition, "part vertex " + std::to_string(v) + " is deleted",
                    {v});
      }
    }
  }
  const std::size_t h = parts.size();
  CompositionSpec spec;
  DigraphBuilder outer(h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      if (i == j) continue;
      const bool first = d.has_arc(parts[i].front(), parts[j].front());
      for (Vertex s : parts[i]) {
        for (Vertex t : parts[j]) {
          if (d.has_arc(s, t) != first) {
            throw Error(ErrorCode::NotAComposition,
                        "arcs between parts " + std::to_string(i) + " and " + std::to_string(j) +
                            " are not uniform",
                        {s, t});
          }
        }
      }
      if (first) outer.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  spec.outer = outer.build();
  for (const VertexList& p : parts) {
    DigraphBuilder inner(p.size());
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a != b && d.has_arc(p[a], p[b])) {
          inner.add_arc(static_cast<Vertex>(a), static_cast<Vertex>(b));
        }
      }
    }
    spec.parts.push_back({p, inner.build()});
  }
  return spec;
}

}  // namespace dilink
