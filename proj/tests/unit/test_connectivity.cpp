#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "brute.hpp"
#include "dilink/connectivity.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/oracle.hpp"

using namespace dilink;

namespace {

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm) {
  DigraphBuilder b(d.capacity());
  for (const Arc& a : d.arcs()) b.add_arc(perm[a.tail], perm[a.head]);
  return b.build();
}

VertexList pick(VertexList& pool, std::size_t count) {
  count = std::min(count, pool.size());
  VertexList out(pool.begin(), pool.begin() + static_cast<long>(count));
  pool.erase(pool.begin(), pool.begin() + static_cast<long>(count));
  return out;
}

}  // namespace

TEST_CASE("local_connectivity examples") {
  Digraph k4 = complete_digraph(4);
  for (Vertex x : k4.vertices()) {
    for (Vertex y : k4.vertices()) {
      if (x == y) continue;
      CHECK(local_connectivity(k4, x, y) == 3);
      CHECK(brute::local_connectivity(k4, x, y) == 3);
    }
  }
  CHECK(local_connectivity(directed_cycle(3), 0, 1) == 1);
  CHECK(local_connectivity(directed_path(3), 2, 0) == 0);
  CHECK_THROWS_AS(local_connectivity(directed_path(3), 1, 1), Error);
}

TEST_CASE("kappa examples") {
  for (std::size_t n = 2; n <= 6; ++n) CHECK(kappa(transitive_tournament(n)) == 0);
  CHECK(kappa(complete_digraph(5)) == 4);
  CHECK(kappa(circulant_tournament(7)) == 3);
  CHECK(brute::kappa(circulant_tournament(7)) == 3);
  CHECK(kappa(Digraph(1)) == 0);
  CHECK(is_k_strong(circulant_tournament(7), 3));
  CHECK_FALSE(is_k_strong(circulant_tournament(7), 4));
}

TEST_CASE("flow agrees with exhaustive search on small digraphs") {
  Rng rng(2024);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 2 + rng.below(7);
    const double p = 0.3 + 0.1 * static_cast<double>(rng.below(7));
    Digraph d = random_digraph(n, p, rng);
    CHECK(kappa(d) == brute::kappa(d));
    for (int k = 1; k <= 4; ++k) CHECK(is_k_strong(d, k) == (brute::kappa(d) >= k));
    for (Vertex x : d.vertices()) {
      for (Vertex y : d.vertices()) {
        if (x != y) CHECK(local_connectivity(d, x, y) == brute::local_connectivity(d, x, y));
      }
    }
  }
}

TEST_CASE("menger_set_paths") {
  Digraph k5 = complete_digraph(5);
  const VertexList x{0, 1}, y{2, 3};
  MengerResult r = menger_set_paths(k5, x, y, {});
  REQUIRE(r.feasible);
  CHECK(r.paths.size() == 2);
  for (const Path& p : r.paths.paths) CHECK(p.size() == 2);

  const VertexList from{0}, to{2}, avoid{1};
  MengerResult blocked = menger_set_paths(directed_path(3), from, to, avoid);
  CHECK_FALSE(blocked.feasible);
  CHECK(blocked.separator == VertexList{1});

  const VertexList a{0, 1}, b{1, 2};
  CHECK_THROWS_AS(menger_set_paths(k5, a, b, {}), Error);

  Rng rng(77);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + rng.below(5);
    Digraph d = random_digraph(n, 0.35, rng);
    VertexList pool = d.vertices();
    rng.shuffle(pool);
    const std::size_t s = 1 + rng.below(std::min<std::size_t>(3, n / 2));
    VertexList xs = pick(pool, s);
    VertexList ys = pick(pool, s);
    VertexList av = pick(pool, std::min<std::size_t>(pool.size(), rng.below(2)));
    MengerResult m = menger_set_paths(d, xs, ys, av);
    const int best = brute::max_disjoint_set_paths(d, xs, ys, av);
    CHECK(m.feasible == (best == static_cast<int>(s)));
    if (m.feasible) {
      std::vector<TerminalPair> roles;
      for (const Path& p : m.paths.paths) roles.push_back({p.front(), p.back()});
      CHECK(verify_linkage(d, roles, m.paths).passed);
      for (std::size_t i = 0; i < s; ++i) CHECK(m.paths.paths[i].front() == xs[i]);
    } else {
      // Every usable path meets the separator, and it is small enough.
      VertexList cut_avoid = av;
      std::size_t fresh = 0;
      for (Vertex v : m.separator) {
        if (std::find(av.begin(), av.end(), v) == av.end()) ++fresh;
        cut_avoid.push_back(v);
      }
      CHECK(fresh < s);
      std::sort(cut_avoid.begin(), cut_avoid.end());
      cut_avoid.erase(std::unique(cut_avoid.begin(), cut_avoid.end()), cut_avoid.end());
      std::uint32_t blocked_mask = 0;
      for (Vertex v : cut_avoid) blocked_mask |= 1u << v;
      for (Vertex from_v : xs) {
        for (Vertex to_v : ys) {
          if ((blocked_mask >> from_v) & 1u || (blocked_mask >> to_v) & 1u) continue;
          CHECK(brute::simple_paths(d, from_v, to_v, blocked_mask).empty());
        }
      }
    }
  }
}

TEST_CASE("min_vertex_menger") {
  // Each start has an arc to its own target.
  Digraph d = build_digraph(6, std::vector<Arc>{{0, 3}, {1, 4}, {2, 5}, {0, 4}, {3, 5}});
  const VertexList u{0, 1, 2}, y{3, 4, 5};
  MengerResult r = min_vertex_menger(d, u, y, {});
  REQUIRE(r.feasible);
  CHECK(r.total_vertices == 6);

  // Target 5 is only reachable through vertex 6.
  Digraph g = build_digraph(7, std::vector<Arc>{{0, 3}, {1, 4}, {2, 6}, {6, 5}, {0, 5}, {3, 4}});
  MengerResult forced = min_vertex_menger(g, u, y, {});
  REQUIRE(forced.feasible);
  CHECK(forced.total_vertices == 7);
  CHECK(brute::min_vertex_system(g, u, y, {}) == 7);

  Rng rng(5);
  int feasible = 0;
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 4 + rng.below(7);
    Digraph h = random_digraph(n, 0.3, rng);
    VertexList pool = h.vertices();
    rng.shuffle(pool);
    const std::size_t t = 1 + rng.below(2);
    VertexList starts = pick(pool, t + rng.below(2));
    VertexList targets = pick(pool, t);
    VertexList avoid = pick(pool, rng.below(2));
    if (targets.size() < t) continue;
    MengerResult m = min_vertex_menger(h, starts, targets, avoid);
    auto expected = brute::min_vertex_system(h, starts, targets, avoid);
    CHECK(m.feasible == expected.has_value());
    if (!m.feasible) continue;
    ++feasible;
    CHECK(m.total_vertices == *expected);
    CHECK(static_cast<std::int64_t>(m.paths.vertex_count()) == m.total_vertices);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const Path& p = m.paths.paths[i];
      CHECK(p.back() == targets[i]);
      for (std::size_t j = 1; j < p.size(); ++j) {
        CHECK(std::find(starts.begin(), starts.end(), p[j]) == starts.end());
      }
    }
  }
  CHECK(feasible >= 50);
}

TEST_CASE("flow answers survive relabeling") {
  Rng rng(31);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 5 + rng.below(8);
    Digraph d = random_digraph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Digraph r = relabel(d, perm);
    CHECK(kappa(d) == kappa(r));
    for (Vertex x = 0; x < static_cast<Vertex>(n); ++x) {
      for (Vertex y = 0; y < static_cast<Vertex>(n); ++y) {
        if (x != y) CHECK(local_connectivity(d, x, y) == local_connectivity(r, perm[x], perm[y]));
      }
    }
    const VertexList u{0, 1}, y{2, 3};
    const VertexList ru{perm[0], perm[1]}, ry{perm[2], perm[3]};
    MengerResult a = min_vertex_menger(d, u, y, {});
    MengerResult b = min_vertex_menger(r, ru, ry, {});
    CHECK(a.feasible == b.feasible);
    CHECK(a.total_vertices == b.total_vertices);
  }
}
