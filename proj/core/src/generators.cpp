#include "dilink/generators.hpp"

#include <numeric>
#include <string>

#include "dilink/error.hpp"
#include "dilink/oracle.hpp"

namespace dilink {

Digraph complete_digraph(std::size_t n) {
  DigraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) b.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return b.build();
}

Digraph transitive_tournament(std::size_t n) {
  DigraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) b.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return b.build();
}

Digraph directed_path(std::size_t n) {
  DigraphBuilder b(n);
  for (std::size_t v = 0; v + 1 < n; ++v) b.add_arc(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return b.build();
}

Digraph directed_cycle(std::size_t n) {
  DigraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) {
    Vertex next = static_cast<Vertex>((v + 1) % n);
    if (next != static_cast<Vertex>(v)) b.ensure_arc(static_cast<Vertex>(v), next);
  }
  return b.build();
}

Digraph random_tournament(std::size_t n, std::uint64_t seed) {
  return random_semicomplete(n, 0.0, seed);
}

Digraph circulant_tournament(std::size_t n) {
  if (n % 2 == 0 || n < 3) {
    throw Error(ErrorCode::EvenOrder,
                "circulant tournament needs an odd order >= 3, got " + std::to_string(n));
  }
  DigraphBuilder b(n);
  const std::size_t half = (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= half; ++s) {
      b.add_arc(static_cast<Vertex>(i), static_cast<Vertex>((i + s) % n));
    }
  }
  return b.build();
}

Digraph random_semicomplete(std::size_t n, double p_double, Rng& rng) {
  DigraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      Vertex a = static_cast<Vertex>(u), c = static_cast<Vertex>(v);
      if (rng.coin(0.5)) std::swap(a, c);
      b.add_arc(a, c);
      if (rng.coin(p_double)) b.add_arc(c, a);
    }
  }
  return b.build();
}

Digraph random_semicomplete(std::size_t n, double p_double, std::uint64_t seed) {
  Rng rng(seed);
  return random_semicomplete(n, p_double, rng);
}

Digraph random_digraph(std::size_t n, double p, Rng& rng) {
  DigraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && rng.coin(p)) b.add_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return b.build();
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return random_digraph(n, p, rng);
}

namespace {

Digraph random_part(std::size_t size, PartStyle style, double p_internal, Rng& rng) {
  switch (style) {
    case PartStyle::Arcless:
      return Digraph(size);
    case PartStyle::Random:
      return random_digraph(size, p_internal, rng);
    case PartStyle::Transitive: {
      std::vector<Vertex> order(size);
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      DigraphBuilder b(size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = i + 1; j < size; ++j) b.add_arc(order[i], order[j]);
      }
      return b.build();
    }
  }
  return Digraph(size);
}

CompositionSpec assemble(Digraph outer, std::vector<Digraph> inners) {
  CompositionSpec spec;
  spec.outer = std::move(outer);
  Vertex next = 0;
  for (Digraph& inner : inners) {
    Part part;
    part.vertices.resize(inner.capacity());
    std::iota(part.vertices.begin(), part.vertices.end(), next);
    next += static_cast<Vertex>(inner.capacity());
    part.inner = std::move(inner);
    spec.parts.push_back(std::move(part));
  }
  return spec;
}

}  // namespace

CompositionSpec random_composition(std::size_t h, std::span<const std::size_t> part_sizes,
                                   double p_double, std::uint64_t seed,
                                   const CompositionOptions& options) {
  if (h < 2 || h != part_sizes.size()) {
    throw Error(ErrorCode::ArityMismatch, "need h >= 2 parts and one size per part; got h=" +
                                              std::to_string(h) + " and " +
                                              std::to_string(part_sizes.size()) + " sizes");
  }
  Rng rng(seed);
  Digraph outer = random_semicomplete(h, p_double, rng);
  std::vector<Digraph> inners;
  for (std::size_t size : part_sizes) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "parts must be non-empty");
    inners.push_back(random_part(size, options.style, options.p_internal, rng));
  }
  return assemble(std::move(outer), std::move(inners));
}

CompositionSpec random_quasi_transitive(std::span<const std::size_t> part_sizes,
                                        std::uint64_t seed) {
  const std::size_t h = part_sizes.size();
  if (h < 3) throw Error(ErrorCode::ArityMismatch, "a strong tournament needs h >= 3 parts");
  Rng rng(seed);
  Digraph outer = random_semicomplete(h, 0.0, rng);
  while (!is_strong(outer)) outer = random_semicomplete(h, 0.0, rng);
  std::vector<Digraph> inners;
  for (std::size_t size : part_sizes) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "parts must be non-empty");
    PartStyle style = rng.coin(0.5) ? PartStyle::Arcless : PartStyle::Transitive;
    inners.push_back(random_part(size, style, 0.0, rng));
  }
  return assemble(std::move(outer), std::move(inners));
}

NonLinkedFamily non_linked_composition_family(int k, const Digraph& core,
                                              std::span<const TerminalPair> core_witness) {
  if (k < 3) {
    throw Error(ErrorCode::KTooSmall,
                "k = " + std::to_string(k) + " gives fewer than 3 outer vertices");
  }
  if (core.order() != core.capacity() || core.order() < 2 || !is_strong(core)) {
    throw Error(ErrorCode::CoreNotStrong, "the core digraph must be strong");
  }
  if (core_witness.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "the core witness needs exactly two pairs");
  }
  auto check = brute_force_disjoint_paths(core, core_witness, 1'000'000);
  if (check.status != SearchStatus::Infeasible) {
    throw Error(ErrorCode::PreconditionViolated,
                "the core witness pairs are linkable (or undecided) in the core",
                {core_witness[0].source, core_witness[0].target, core_witness[1].source,
                 core_witness[1].target});
  }

  const std::size_t r = static_cast<std::size_t>(2 * k - 3);
  DigraphBuilder outer(r);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    for (std::size_t j = i + 1; j + 1 < r; ++j) {
      outer.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    outer.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(r - 1));
    outer.add_arc(static_cast<Vertex>(r - 1), static_cast<Vertex>(i));
  }
  std::vector<Digraph> inners(r - 1, Digraph(1));
  inners.push_back(core);

  NonLinkedFamily family;
  family.spec = assemble(outer.build(), std::move(inners));
  const Vertex offset = static_cast<Vertex>(r - 1);
  for (int i = 1; i <= k - 2; ++i) {
    family.bad_pairs.push_back({2 * i - 1, 2 * i - 2});  // x_i = v_{2i}, y_i = v_{2i-1}
  }
  family.bad_pairs.push_back(
      {offset + core_witness[0].source, offset + core_witness[0].target});
  family.bad_pairs.push_back(
      {offset + core_witness[1].source, offset + core_witness[1].target});
  return family;
}

NonLinkedFamily non_linked_composition_family(int k, const Digraph& core) {
  if (k < 3) {
    throw Error(ErrorCode::KTooSmall,
                "k = " + std::to_string(k) + " gives fewer than 3 outer vertices");
  }
  if (core.order() < 4) {
    throw Error(ErrorCode::PreconditionViolated, "a core that is not 2-linked needs >= 4 vertices");
  }
  auto linked = brute_force_k_linked(core, 2, 10'000'000);
  if (linked.status != LinkedStatus::NotLinked) {
    throw Error(ErrorCode::PreconditionViolated,
                "no unlinkable pair assignment found in the core");
  }
  return non_linked_composition_family(k, core, linked.witness);
}

Digraph default_family_core() { return directed_cycle(4); }

std::vector<TerminalPair> default_family_core_witness() { return {{0, 2}, {1, 3}}; }

}  // namespace dilink
