#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "dilink/composition.hpp"
#include "dilink/connectivity.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/oracle.hpp"

using namespace dilink;

TEST_CASE("random_tournament") {
  CHECK(random_tournament(1, 4).arc_count() == 0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(random_tournament(3, seed).arc_count() == 3);
  CHECK(random_tournament(10, 7) == random_tournament(10, 7));
  CHECK(is_tournament(random_tournament(25, 1)));
}

TEST_CASE("circulant_tournament") {
  CHECK(circulant_tournament(3) == directed_cycle(3));
  Digraph c5 = circulant_tournament(5);
  CHECK(brute::kappa(c5) == 2);
  CHECK(kappa(c5) == 2);
  for (Vertex v : c5.vertices()) {
    CHECK(c5.out_degree(v) == 2);
    CHECK(c5.in_degree(v) == 2);
  }
  CHECK_THROWS_AS(circulant_tournament(4), Error);
}

TEST_CASE("random_semicomplete") {
  CHECK(is_tournament(random_semicomplete(12, 0.0, 3)));
  Digraph full = random_semicomplete(7, 1.0, 3);
  CHECK(full == complete_digraph(7));
  CHECK(kappa(full) == 6);
  CHECK(is_semicomplete(random_semicomplete(20, 0.3, 42)));
  CHECK(random_semicomplete(20, 0.3, 42) == random_semicomplete(20, 0.3, 42));
}

TEST_CASE("random_composition") {
  const std::vector<std::size_t> ones{1, 1, 1, 1, 1};
  CompositionSpec s = random_composition(5, ones, 0.3, 8);
  CHECK(compose(s) == s.outer);

  const std::vector<std::size_t> sizes{2, 2, 2};
  CompositionSpec c = random_composition(3, sizes, 0.5, 17);
  Digraph d = compose(c);
  CHECK(d.order() == 6);
  std::size_t expected = 0;
  for (const Arc& a : c.outer.arcs()) expected += sizes[a.tail] * sizes[a.head];
  CHECK(d.arc_count() == expected);

  // Arcless parts: non-adjacent pairs are exactly the pairs inside a part.
  const std::vector<std::size_t> mixed{3, 1, 2, 4};
  CompositionSpec e = random_composition(4, mixed, 0.2, 2);
  Digraph de = compose(e);
  auto index = part_index(de.capacity(), e.part_sets());
  for (Vertex u : de.vertices()) {
    for (Vertex v : de.vertices()) {
      if (u < v) CHECK(de.adjacent(u, v) == (index[u] != index[v]));
    }
  }
  CHECK_THROWS_AS(random_composition(3, mixed, 0.2, 2), Error);
  CHECK(compose(random_composition(4, mixed, 0.2, 2, {PartStyle::Random, 0.7})) ==
        compose(random_composition(4, mixed, 0.2, 2, {PartStyle::Random, 0.7})));
}

TEST_CASE("random_quasi_transitive") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<std::size_t> sizes{2, 1, 3, 2};
    Digraph d = compose(random_quasi_transitive(sizes, seed));
    CHECK(brute::l_quasi_transitive(d, 2));
    CHECK(is_strong(d));
  }
}

TEST_CASE("non_linked_composition_family") {
  NonLinkedFamily f = non_linked_composition_family(3, default_family_core());
  Digraph d = compose(f.spec);
  CHECK(d.order() == 6);
  CHECK(is_semicomplete(f.spec.outer));
  CHECK(f.spec.outer.order() == 3);
  CHECK(kappa(d) >= 1);
  CHECK(kappa(d) == brute::kappa(d));
  CHECK(brute_force_disjoint_paths(d, f.bad_pairs, 1'000'000).status == SearchStatus::Infeasible);

  auto linked = brute_force_k_linked(d, 3, 10'000'000, true);
  CHECK(linked.status == LinkedStatus::NotLinked);
  auto sorted_bad = f.bad_pairs;
  std::sort(sorted_bad.begin(), sorted_bad.end());
  bool listed = false;
  for (auto w : linked.failing) {
    std::sort(w.begin(), w.end());
    listed = listed || w == sorted_bad;
  }
  CHECK(listed);

  for (int k = 4; k <= 5; ++k) {
    NonLinkedFamily g = non_linked_composition_family(k, default_family_core());
    Digraph dg = compose(g.spec);
    CHECK(dg.order() == static_cast<std::size_t>(2 * k - 4 + 4));
    CHECK(kappa(dg) == brute::kappa(dg));
    CHECK(brute_force_disjoint_paths(dg, g.bad_pairs, 5'000'000).status ==
          SearchStatus::Infeasible);
  }

  CHECK_THROWS_AS(non_linked_composition_family(2, default_family_core()), Error);
  try {
    non_linked_composition_family(3, directed_path(4));
    FAIL("expected CoreNotStrong");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoreNotStrong);
  }
}
