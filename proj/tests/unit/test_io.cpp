#include "doctest.h"

#include "dilink/error.hpp"
#include "dilink/generators.hpp"
#include "dilink/io.hpp"

using namespace dilink;

TEST_CASE("digraph JSON round trip") {
  Digraph t = random_semicomplete(9, 0.3, 7);
  const std::vector<VertexList> parts{{0, 1, 2}, {3, 4, 5, 6, 7, 8}};
  const std::string text = dump(to_json(t, parts, {{"seed", 7}}));
  DigraphDocument doc = parse_digraph(text);
  CHECK(doc.digraph == t);
  CHECK(doc.parts == parts);
  CHECK(doc.meta["seed"] == 7);
  CHECK(dump(to_json(doc.digraph, doc.parts, doc.meta)) == text);

  // Arc order in the input does not matter; output is sorted.
  DigraphDocument messy = parse_digraph(R"({"n": 3, "arcs": [[2,0],[0,1],[1,2]]})");
  CHECK(dump(to_json(messy.digraph)) == "{\"arcs\":[[0,1],[1,2],[2,0]],\"n\":3}\n");
}

TEST_CASE("digraph JSON diagnostics") {
  auto message = [](const std::string& text) {
    try {
      parse_digraph(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"n": 3, "arcs": [[0,1],[1,"x"]]})").find("arcs[1][1]") != std::string::npos);
  CHECK(message(R"({"arcs": []})").find("n: missing") != std::string::npos);
  CHECK(message("{\n  \"n\": 3,\n  \"arcs\": [[0,1]\n").find("line") != std::string::npos);
  CHECK_THROWS_AS(parse_digraph(R"({"n": 2, "arcs": [[0,0]]})"), Error);
}

TEST_CASE("path systems and pairs") {
  PathSystem ps;
  ps.add({0, 3, 1});
  ps.add({2, 4});
  ps.provenance = "test";
  PathSystem back = parse_path_system(dump(to_json(ps)));
  CHECK(back.paths == ps.paths);
  CHECK(back.pairs == ps.pairs);
  CHECK(back.provenance == "test");

  auto pairs = parse_pairs("0:5,3:8");
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[1] == TerminalPair{3, 8});
  CHECK_THROWS_AS(parse_pairs("0-5"), Error);
  CHECK_THROWS_AS(parse_pairs("0:5x"), Error);
}

TEST_CASE("dot export") {
  PathSystem ps;
  ps.add({0, 1});
  const std::string dot = to_dot(directed_cycle(3), &ps);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot.find("2 -> 0") != std::string::npos);
}
