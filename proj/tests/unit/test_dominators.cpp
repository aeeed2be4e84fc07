#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "dilink/dominators.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"

using namespace dilink;

TEST_CASE("two_path_width") {
  Digraph c3 = directed_cycle(3);
  CHECK(two_path_width(c3, 0, 2) == 1);
  Digraph k6 = complete_digraph(6);
  CHECK(two_path_width(k6, 1, 4) == 4);
  CHECK_THROWS_AS(two_path_width(k6, 1, 1), Error);

  Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    Digraph d = random_digraph(10, 0.5, rng);
    for (Vertex v : d.vertices()) {
      for (Vertex u : d.vertices()) {
        if (u == v) continue;
        CHECK(two_path_width(d, v, u) == brute::two_path_middles(d, v, u));
        // Independent 2-paths share only their ends, so the exact packing
        // number of 2-paths equals the middle count.
        int packed = 0;
        for (const Path& p : brute::simple_paths(d, v, u)) packed += p.size() == 3 ? 1 : 0;
        CHECK(packed == two_path_width(d, v, u));
      }
    }
  }
}

TEST_CASE("is_c_good") {
  Digraph c3 = directed_cycle(3);
  CHECK(is_c_good(c3, 2, 0, 1'000'000));
  CHECK(is_c_good(c3, 0, 2, 1));
  CHECK_FALSE(is_c_good(c3, 0, 2, 2));
  Digraph k10 = complete_digraph(10);
  for (Vertex v = 0; v < 10; ++v) {
    for (Vertex u = 0; u < 10; ++u) {
      if (u != v) CHECK(is_c_good(k10, v, u, 8));
    }
  }
}

TEST_CASE("nearly in-dominating vertex") {
  Digraph tt = transitive_tournament(8);
  CHECK(nearly_in_dominating_vertex(tt) == 7);
  auto sink = verify_nearly_in_dominating(tt, 7, 8);
  CHECK(sink.holds);
  CHECK(sink.bad_count == 0);

  CHECK(nearly_in_dominating_vertex(directed_cycle(3)) == 0);
  CHECK(is_c_good(directed_cycle(3), 1, 0, 1));
  CHECK(is_c_good(directed_cycle(3), 2, 0, 1));

  auto source = verify_nearly_in_dominating(transitive_tournament(6), 0, 2);
  CHECK_FALSE(source.holds);

  Digraph t40 = random_tournament(40, 12);
  CHECK(verify_nearly_in_dominating(t40, nearly_in_dominating_vertex(t40), 40).holds);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Digraph t = random_tournament(5 + seed % 26, seed);
    const Vertex u = nearly_in_dominating_vertex(t);
    CHECK(verify_nearly_in_dominating(t, u, static_cast<int>(t.order())).holds);
    CHECK(is_in_king(t, u));
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph s = random_semicomplete(20, 0.3, seed);
    const Vertex u = nearly_in_dominating_vertex(s);
    CHECK(verify_nearly_in_dominating(s, u, 20).holds);
    CHECK(is_in_king(spanning_tournament(s), u));
  }
  CHECK_THROWS_AS(nearly_in_dominating_vertex(directed_path(3)), Error);
}

TEST_CASE("goodness monotonicity") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph t = random_semicomplete(18, 0.2, seed);
    const Vertex u = nearly_in_dominating_vertex(t);
    std::size_t previous = 0;
    for (int c = 1; c <= 18; ++c) {
      std::size_t bad = 0;
      for (Vertex v : t.vertices()) {
        if (v == u) continue;
        if (is_c_good(t, v, u, c + 1)) CHECK(is_c_good(t, v, u, c));
        if (!is_c_good(t, v, u, c)) ++bad;
      }
      CHECK(bad >= previous);
      previous = bad;
    }
    // Goodness in an induced subdigraph carries over to D.
    VertexList keep;
    for (Vertex v : t.vertices()) {
      if (v % 3 != 1 || v == u) keep.push_back(v);
    }
    Digraph sub = induced(t, keep);
    for (Vertex v : keep) {
      if (v == u) continue;
      for (int c = 1; c <= 6; ++c) {
        if (is_c_good(sub, v, u, c)) CHECK(is_c_good(t, v, u, c));
      }
    }
  }
}

TEST_CASE("nearly in-dominating set") {
  CHECK(nearly_in_dominating_set(random_tournament(10, 1), {}, {}, 0).empty());
  CHECK(nearly_in_dominating_set(transitive_tournament(7), {}, {}, 3) == VertexList{6, 5, 4});

  Digraph t = random_tournament(50, 8);
  VertexList u = nearly_in_dominating_set(t, {}, {}, 6);
  CHECK(u.size() == 6);
  CHECK(verify_nearly_in_dominating_set(t, u, 50).holds);

  const VertexList x{0, 1}, y{2, 3};
  VertexList w = nearly_in_dominating_set(t, x, y, 6);
  for (Vertex v : w) CHECK(v > 3);
  CHECK_THROWS_AS(nearly_in_dominating_set(random_tournament(5, 2), x, y, 3), Error);
}

TEST_CASE("gamma dominators") {
  Digraph d = random_semicomplete(14, 0.2, 4);
  const VertexList nbrs(d.out_neighbours(0).begin(), d.out_neighbours(0).end());
  CHECK(is_gamma_dominator(d, 0, nbrs, static_cast<int>(nbrs.size()), Direction::Out));
  CHECK(is_gamma_dominator(d, 0, nbrs, 0, Direction::In));
  CHECK_THROWS_AS(is_gamma_dominator(d, nbrs.front(), nbrs, 1, Direction::Out), Error);

  // |U| = 3k in a semicomplete digraph: a vertex with fewer than 2k
  // out-neighbours in U has at least k+1 in-neighbours there.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph s = random_semicomplete(16, 0.3, seed);
    for (int k = 1; k <= 3; ++k) {
      VertexList u;
      for (int i = 0; i < 3 * k; ++i) u.push_back(i);
      for (Vertex v = 3 * k; v < 16; ++v) {
        if (!is_gamma_dominator(s, v, u, 2 * k, Direction::Out)) {
          CHECK(is_gamma_dominator(s, v, u, k + 1, Direction::In));
        }
      }
    }
  }
}

TEST_CASE("in-kings") {
  for (Vertex v = 0; v < 3; ++v) CHECK(is_in_king(directed_cycle(3), v));
  CHECK_FALSE(is_in_king(transitive_tournament(5), 0));
  CHECK_THROWS_AS(is_in_king(complete_digraph(3), 0), Error);
}

TEST_CASE("goodness profile") {
  Digraph t = random_tournament(9, 5);
  GoodnessProfile g = goodness_profile(t, 4);
  CHECK(g.target == 4);
  CHECK(g.width[4] == -1);
  for (Vertex v : t.vertices()) {
    if (v == 4) continue;
    CHECK(g.width[v] == two_path_width(t, v, 4));
    const bool listed = std::find(g.dominators.begin(), g.dominators.end(), v) != g.dominators.end();
    CHECK(listed == t.has_arc(v, 4));
  }
}
