#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "dilink/composition.hpp"
#include "dilink/digraph.hpp"

namespace dilink {

/// Seeded source of randomness for every generator.
///
/// Backed by std::mt19937_64, whose output sequence is fixed by the standard.
/// Bounded draws and coin flips are derived from raw 64-bit outputs here
/// rather than through <random> distributions, whose algorithms differ
/// between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// True with probability p (53-bit resolution).
  bool coin(double p) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Fixed families.
Digraph complete_digraph(std::size_t n);
Digraph transitive_tournament(std::size_t n);  // i -> j for all i < j
Digraph directed_path(std::size_t n);          // 0 -> 1 -> ... -> n-1
Digraph directed_cycle(std::size_t n);         // directed path plus (n-1) -> 0

/// Exactly one arc per pair, orientation by fair coin.
Digraph random_tournament(std::size_t n, std::uint64_t seed);

/// Vertex i dominates i+1, ..., i+(n-1)/2 (mod n). Throws EvenOrder.
Digraph circulant_tournament(std::size_t n);

/// Random tournament plus, per pair, the reverse arc with probability p_double.
Digraph random_semicomplete(std::size_t n, double p_double, std::uint64_t seed);
Digraph random_semicomplete(std::size_t n, double p_double, Rng& rng);

/// Each ordered pair is an arc independently with probability p.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);
Digraph random_digraph(std::size_t n, double p, Rng& rng);

enum class PartStyle {
  Arcless,     // extended semicomplete digraphs
  Random,      // internal arcs with probability p_internal
  Transitive,  // internal transitive tournament on a random vertex order
};

struct CompositionOptions {
  PartStyle style = PartStyle::Arcless;
  double p_internal = 0.5;
};

/// H = random_semicomplete(h, p_double) with parts of the given sizes; part i
/// occupies the next part_sizes[i] ids. Throws ArityMismatch when
/// h != part_sizes.size() or h < 2.
CompositionSpec random_composition(std::size_t h, std::span<const std::size_t> part_sizes,
                                   double p_double, std::uint64_t seed,
                                   const CompositionOptions& options = {});

/// Quasi-transitive composition: H a strong random tournament and each part
/// arcless or a transitive tournament (chosen per part with probability 1/2).
/// Compositions of this shape are quasi-transitive, and non-adjacent pairs
/// exist exactly inside the arcless parts.
CompositionSpec random_quasi_transitive(std::span<const std::size_t> part_sizes,
                                        std::uint64_t seed);

/// Output of non_linked_composition_family().
struct NonLinkedFamily {
  CompositionSpec spec;
  std::vector<TerminalPair> bad_pairs;
};

/// Strong semicomplete composition on r = 2k-3 parts that is not k-linked.
///
/// R is transitive on v_1..v_{r-1} (v_i -> v_j for i < j) and v_r forms a
/// 2-cycle with every other vertex. S_1..S_{r-1} are single vertices and S_r
/// is `core`. The returned pairs are x_i = v_{2i}, y_i = v_{2i-1} for
/// i < k-1, then (u, v) and (x, y) from `core_witness`, a pair assignment
/// that `core` cannot link. In the realization v_i has id i-1 and core vertex
/// c has id r-1+c.
///
/// Throws KTooSmall for k < 3, CoreNotStrong, and PreconditionViolated when
/// the witness is linkable in `core`.
NonLinkedFamily non_linked_composition_family(int k, const Digraph& core,
                                              std::span<const TerminalPair> core_witness);

/// Same, with the witness found by exhaustive search over `core`.
NonLinkedFamily non_linked_composition_family(int k, const Digraph& core);

/// The shipped core: the directed 4-cycle with unlinkable pairs (0,2),(1,3).
Digraph default_family_core();
std::vector<TerminalPair> default_family_core_witness();

}  // namespace dilink
