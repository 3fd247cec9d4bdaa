#include <doctest.h>

#include "assembly.hpp"
#include "graph6.hpp"

using namespace specgap;

TEST_CASE("K3 encodes as Bw") {
  Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(to_graph6(k3) == "Bw");
  CHECK(from_graph6("Bw") == k3);
}

TEST_CASE("family round trips, including the long form") {
  for (int n : {11, 12, 15, 21, 62, 63, 100, 200}) {
    Graph g = build_G_n(n).graph;
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_WITH_AS(from_graph6("B"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(from_graph6("Bww"), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(from_graph6(""), doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(from_graph6("B\x01"), doctest::Contains("ParseError"), Error);
}

TEST_CASE("empty and edgeless graphs") {
  Graph e0 = make_graph(0, {});
  CHECK(from_graph6(to_graph6(e0)) == e0);
  Graph e5 = make_graph(5, {});
  CHECK(from_graph6(to_graph6(e5)) == e5);
}
