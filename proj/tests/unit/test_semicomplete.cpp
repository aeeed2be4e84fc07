#include "doctest.h"

#include <algorithm>

#include "dilink/connectivity.hpp"
#include "dilink/dominators.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/oracle.hpp"
#include "dilink/semicomplete_linkage.hpp"

using namespace dilink;

namespace {

std::vector<TerminalPair> random_pairs(const Digraph& d, int k, Rng& rng) {
  VertexList vs = d.vertices();
  rng.shuffle(vs);
  std::vector<TerminalPair> pairs;
  for (int i = 0; i < k; ++i) pairs.push_back({vs[2 * i], vs[2 * i + 1]});
  return pairs;
}

AnchorContext simple_context() {
  AnchorContext ctx;
  ctx.u = {0, 1, 2};
  ctx.x = {3};
  ctx.y = {4};
  ctx.q.add({0, 4});
  return ctx;
}

}  // namespace

TEST_CASE("anchor_short_paths") {
  const AnchorContext ctx = simple_context();
  const VertexList none;
  CHECK(anchor_short_paths(complete_digraph(20), ctx, none, none, none).empty());

  // n = 20: exactly 7k + 7|A| = 14 qualifying out-neighbours of a = 5.
  const VertexList a{5}, s{0};
  PathSystem ps = anchor_short_paths(complete_digraph(20), ctx, a, s, none);
  REQUIRE(ps.size() == 1);
  CHECK(ps.paths[0].size() == 3);
  const std::vector<TerminalPair> role{{5, 0}};
  CHECK(verify_linkage(complete_digraph(20), role, ps).passed);

  try {
    anchor_short_paths(complete_digraph(19), ctx, a, s, none);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolated);
  }
  AnchorOptions relaxed;
  relaxed.check_precondition = false;
  CHECK(anchor_short_paths(complete_digraph(19), ctx, a, s, none, relaxed).size() == 1);
}

TEST_CASE("partition_terminals") {
  // Complete digraph: every out-neighbour dominates all of U.
  Digraph k = complete_digraph(18);
  const VertexList x{0, 1, 2}, y{3, 4, 5}, u{6, 7, 8, 9, 10, 11, 12, 13, 14};
  TerminalPartition p = partition_terminals(k, x, y, u);
  CHECK(p.x1 == x);
  CHECK(p.x2.empty());

  // U consists of sources relative to everything else: nobody reaches into U.
  DigraphBuilder b(12);
  for (Vertex i = 0; i < 12; ++i) {
    for (Vertex j = i + 1; j < 12; ++j) {
      if (j < 3) {
        b.add_arc(i, j);
      } else if (i < 3) {
        b.add_arc(i, j);
      } else {
        b.add_arc(i, j);
        b.add_arc(j, i);
      }
    }
  }
  const VertexList su{0, 1, 2}, sx{3}, sy{4};
  TerminalPartition none = partition_terminals(b.build(), sx, sy, su);
  CHECK(none.x1.empty());
  CHECK(none.x2 == sx);

  Digraph t = random_tournament(200, 9);
  Rng rng(4);
  for (int round = 0; round < 5; ++round) {
    auto pairs = random_pairs(t, 2, rng);
    const VertexList xs = sources_of(pairs), ys = targets_of(pairs);
    const VertexList us = nearly_in_dominating_set(t, xs, ys, 6);
    TerminalPartition tp = partition_terminals(t, xs, ys, us);
    VertexList plus = tp.x1_plus;
    std::sort(plus.begin(), plus.end());
    CHECK(std::adjacent_find(plus.begin(), plus.end()) == plus.end());
    for (std::size_t i = 0; i < tp.x1.size(); ++i) {
      const Vertex v = tp.x1_plus[i];
      CHECK(t.has_arc(tp.x1[i], v));
      for (auto set : {xs, ys, us}) CHECK(std::find(set.begin(), set.end(), v) == set.end());
      CHECK(is_gamma_dominator(t, v, us, 4, Direction::Out));
    }
  }
}

TEST_CASE("solve_semicomplete examples") {
  for (int k = 1; k <= 3; ++k) {
    Digraph d = complete_digraph(static_cast<std::size_t>(5 * k));
    Rng rng(static_cast<std::uint64_t>(k));
    auto pairs = random_pairs(d, k, rng);
    SolveReport r = solve_semicomplete(d, pairs);
    REQUIRE(r.linked());
    CHECK(verify_linkage(d, pairs, r.paths).passed);
    for (const Path& p : r.paths.paths) CHECK(p.size() == 2);
  }

  const std::vector<TerminalPair> two{{5, 1}, {7, 2}};
  SolveReport tt = solve_semicomplete(transitive_tournament(12), two);
  CHECK(tt.outcome == Outcome::HypothesisViolated);
  CHECK(tt.hypothesis == "kappa");

  CHECK_THROWS_AS(solve_semicomplete(complete_digraph(6), std::vector<TerminalPair>{{0, 1}, {1, 2}}),
                  Error);
  SolveReport ns = solve_semicomplete(directed_path(4), std::vector<TerminalPair>{{0, 3}});
  CHECK(ns.outcome == Outcome::HypothesisViolated);
}

TEST_CASE("solve_semicomplete on a large tournament") {
  Digraph t;
  for (std::uint64_t seed = 100;; ++seed) {
    t = random_tournament(200, seed);
    if (t.min_out_degree() >= 44 && is_k_strong(t, 6)) break;
  }
  Rng rng(8);
  for (int round = 0; round < 3; ++round) {
    auto pairs = random_pairs(t, 2, rng);
    // Force the full pipeline: no terminal pair joined by an arc.
    if (t.has_arc(pairs[0].source, pairs[0].target)) std::swap(pairs[0].source, pairs[0].target);
    if (t.has_arc(pairs[1].source, pairs[1].target)) std::swap(pairs[1].source, pairs[1].target);
    SolveReport r = solve_semicomplete(t, pairs);
    INFO(r.stage, " ", r.detail);
    REQUIRE(r.linked());
    CHECK(verify_linkage(t, pairs, r.paths).passed);
    for (const AuditEntry& e : r.audit) CHECK(e.passed);
  }
}

TEST_CASE("solve_semicomplete below the bounds") {
  // The audit can be skipped; a Linked answer must still verify, and on
  // small inputs the exhaustive search must agree that a linkage exists.
  Rng rng(21);
  int linked = 0;
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 8 + rng.below(40);
    Digraph d = random_semicomplete(n, 0.6, rng);
    auto pairs = random_pairs(d, 1 + static_cast<int>(rng.below(2)), rng);
    SolveReport r = solve_semicomplete(d, pairs, {false});
    for (const AuditEntry& e : r.audit) {
      if (e.name == "kappa" || e.name == "min_out_degree") CHECK(e.skipped);
    }
    if (!r.linked()) continue;
    ++linked;
    CHECK(verify_linkage(d, pairs, r.paths).passed);
    if (n <= 10) {
      CHECK(brute_force_disjoint_paths(d, pairs, 1'000'000).status == SearchStatus::Found);
    }
  }
  CHECK(linked > 0);
}
