#include "doctest.h"

#include "brute.hpp"
#include "dilink/composition.hpp"
#include "dilink/composition_linkage.hpp"
#include "dilink/error.hpp"
#include "dilink/generators.hpp"

using namespace dilink;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Format;
}

Digraph arcs(std::size_t n, std::vector<Arc> list) { return build_digraph(n, list); }

}  // namespace

TEST_CASE("build_digraph") {
  Digraph c3 = arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(c3.arc_count() == 3);
  for (Vertex v : c3.vertices()) CHECK(c3.out_degree(v) == 1);

  Digraph two = arcs(2, {{0, 1}, {1, 0}});
  CHECK(is_semicomplete(two));
  CHECK_FALSE(is_tournament(two));

  CHECK(code_of([] { arcs(2, {{0, 0}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { arcs(2, {{0, 1}, {0, 1}}); }) == ErrorCode::DuplicateArc);
  CHECK(code_of([] { arcs(2, {{0, 2}}); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("compose") {
  Digraph h2 = complete_digraph(2);
  CompositionSpec single{h2, {{{0}, Digraph(1)}, {{1}, Digraph(1)}}};
  CHECK(compose(single) == h2);

  CompositionSpec blown{h2, {{{0, 1}, Digraph(2)}, {{2, 3, 4}, Digraph(3)}}};
  CHECK(compose(blown).arc_count() == 12);

  Digraph tri = transitive_tournament(3);
  CompositionSpec same{tri, {{{0}, Digraph(1)}, {{1}, Digraph(1)}, {{2}, Digraph(1)}}};
  CHECK(compose(same) == tri);

  CompositionSpec overlap{h2, {{{0, 1}, Digraph(2)}, {{1, 2}, Digraph(2)}}};
  CHECK(code_of([&] { compose(overlap); }) == ErrorCode::PartOverlap);
  CompositionSpec arity{transitive_tournament(3), {{{0}, Digraph(1)}, {{1}, Digraph(1)}}};
  CHECK(code_of([&] { compose(arity); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("composition round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::vector<std::size_t> sizes{2, 3, 1, 2};
    CompositionSpec spec = random_composition(4, sizes, 0.4, seed, {PartStyle::Random, 0.5});
    Digraph d = compose(spec);
    Digraph stripped = strip_intra_part_arcs(d, spec.part_sets());
    DigraphBuilder b(stripped);
    for (const Part& p : spec.parts) {
      for (const Arc& a : p.inner.arcs()) b.add_arc(p.vertices[a.tail], p.vertices[a.head]);
    }
    CHECK(b.build() == d);
    CompositionSpec back = composition_from_partition(d, spec.part_sets());
    CHECK(back.outer == spec.outer);
    CHECK(compose(back) == d);
  }
}

TEST_CASE("semicomplete and quasi-transitive predicates") {
  CHECK(is_semicomplete(directed_cycle(3)));
  CHECK_FALSE(is_semicomplete(directed_path(3)));
  CHECK(is_semicomplete(complete_digraph(4)));

  CHECK_FALSE(is_l_quasi_transitive(directed_path(3), 2));
  CHECK(is_l_quasi_transitive(directed_cycle(4), 3));
  CHECK_FALSE(is_l_quasi_transitive(directed_cycle(4), 2));
  CHECK(brute::l_quasi_transitive(directed_cycle(4), 3));
  CHECK_FALSE(brute::l_quasi_transitive(directed_cycle(4), 2));

  Digraph sc = random_semicomplete(9, 0.3, 5);
  for (int l = 1; l <= 5; ++l) CHECK(is_l_quasi_transitive(sc, l));

  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng.below(12);
    Digraph d = random_digraph(n, 0.5 + 0.5 * static_cast<double>(rng.below(100)) / 100, rng);
    CHECK(is_l_quasi_transitive(d, 1) == is_semicomplete(d));
  }
  for (int i = 0; i < 200; ++i) {
    Digraph d = random_digraph(1 + rng.below(7), 0.6, rng);
    const int l = 2 + static_cast<int>(rng.below(3));
    CHECK(is_l_quasi_transitive(d, l) == brute::l_quasi_transitive(d, l));
    auto bad = l_quasi_transitivity_violation(d, l);
    CHECK(bad.has_value() != is_l_quasi_transitive(d, l));
    if (bad) CHECK_FALSE(d.adjacent(bad->tail, bad->head));
  }
}

TEST_CASE("spanning_tournament") {
  Digraph t = random_tournament(12, 3);
  CHECK(spanning_tournament(t) == t);
  CHECK(spanning_tournament(complete_digraph(3)) == transitive_tournament(3));
  CHECK(code_of([] { spanning_tournament(directed_path(3)); }) == ErrorCode::NotSemicomplete);

  Digraph sc = random_semicomplete(15, 0.4, 9);
  Digraph st = spanning_tournament(sc);
  CHECK(st.arc_count() == 15 * 14 / 2);
  for (const Arc& a : st.arcs()) CHECK(sc.has_arc(a.tail, a.head));
}

TEST_CASE("induced and deletion") {
  Digraph c3 = directed_cycle(3);
  const VertexList keep{0, 1};
  Digraph sub = induced(c3, keep);
  CHECK(sub.arc_count() == 1);
  CHECK(sub.has_arc(0, 1));
  CHECK(sub.capacity() == 3);
  CHECK_FALSE(sub.contains(2));

  CHECK(remove_vertices(c3, {}) == c3);
  const VertexList drop{2};
  Digraph del = remove_vertices(c3, drop);
  CHECK(del.arc_count() == 1);
  CHECK(del.has_arc(0, 1));
  CHECK(del.order() == 2);

  const VertexList bad{7};
  CHECK(code_of([&] { induced(c3, bad); }) == ErrorCode::VertexOutOfRange);
}

TEST_CASE("shortest paths and distances") {
  Digraph p = directed_path(5);
  auto sp = shortest_path(p, 0, 4);
  REQUIRE(sp);
  CHECK(sp->size() == 5);
  CHECK_FALSE(shortest_path(p, 4, 0));
  auto dist = distances_to(p, 3);
  CHECK(dist[0] == 3);
  CHECK(dist[4] == -1);
}
