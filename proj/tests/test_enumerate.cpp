#include <doctest.h>

#include <set>

#include "assembly.hpp"
#include "enumerate.hpp"
#include "graph6.hpp"

using namespace specgap;

TEST_CASE("tiny censuses") {
  CHECK(enumerate_quartic(5).size() == 1);   // the complete graph
  CHECK(enumerate_quartic(6).size() == 1);   // the octahedron
  CHECK(enumerate_quartic(7).size() == 2);
}

TEST_CASE("census agrees with the complement oracle up to n = 8") {
  for (int n = 5; n <= 8; ++n) {
    auto census = enumerate_quartic(n);
    auto oracle = complement_oracle(n);
    CAPTURE(n);
    REQUIRE(census.size() == oracle.size());
    for (size_t i = 0; i < census.size(); ++i) CHECK(census[i].cert == oracle[i]);
  }
}

TEST_CASE("census entries are connected, quartic, distinct") {
  auto census = enumerate_quartic(9);
  std::set<CanonicalCert> seen;
  for (const auto& e : census) {
    CHECK(is_connected(e.graph));
    CHECK(is_k_regular(e.graph, 4));
    CHECK(seen.insert(e.cert).second);
  }
}

TEST_CASE("the order-9 census is closed under complementation") {
  // complements of quartic graphs on 9 vertices are again quartic, and no
  // disconnected quartic graph on 9 vertices exists
  auto census = enumerate_quartic(9);
  std::set<CanonicalCert> certs;
  for (const auto& e : census) certs.insert(e.cert);
  for (const auto& e : census) {
    Graph comp = complement(e.graph);
    CHECK(is_k_regular(comp, 4));
    CHECK(is_connected(comp));
    CHECK(certs.count(canonical_cert(comp)) == 1);
  }
}

TEST_CASE("randomized double-count audit at n = 10 and 11") {
  for (int n : {10, 11}) {
    auto census = enumerate_quartic(n);
    std::set<CanonicalCert> certs;
    for (const auto& e : census) certs.insert(e.cert);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Graph g = random_quartic(n, seed * 7919 + n);
      CHECK(certs.count(canonical_cert(g)) == 1);
    }
  }
}

TEST_CASE("cap handling") {
  CHECK_THROWS_WITH_AS(enumerate_quartic(4), doctest::Contains("OrderCapExceeded"), Error);
  CHECK_THROWS_WITH_AS(enumerate_quartic(15), doctest::Contains("OrderCapExceeded"), Error);
  CHECK_THROWS_WITH_AS(enumerate_quartic(14), doctest::Contains("OrderCapExceeded"), Error);
  CensusOptions strict;
  strict.cap_seconds = 1e-9;
  CHECK_THROWS_WITH_AS(enumerate_quartic(12, strict), doctest::Contains("OrderCapExceeded"),
                       Error);
}

TEST_CASE("family template recognizer") {
  CHECK(matches_family_template(build_G_n(11).graph));
  CHECK(matches_family_template(build_G_n(16).graph));
  CHECK(matches_family_template(build_H(1, 3, 2).graph));  // D3 end is still template-shaped
  // an off-family middle block fails
  Assembly off = assemble({block(BlockKind::D0), block(BlockKind::M1), mirror(block(BlockKind::D0))});
  CHECK_FALSE(matches_family_template(off.graph));
  // 2-connected quartic graphs are not path-like
  CHECK_FALSE(matches_family_template(complement(make_graph(7, {{0,1},{1,2},{2,3},{3,4},{4,5},{5,6},{0,6}}))));
}

TEST_CASE("minimality certification at n = 11") {
  auto rep = certify_minimal(11);
  CHECK(rep.census_size >= 265);  // sanity: the class is large
  CHECK(rep.unique);
  CHECK(rep.matches_family);
  CHECK(rep.template_ok);
}

TEST_CASE("the census is deterministic across thread counts") {
  CensusOptions one, four;
  one.threads = 1;
  four.threads = 4;
  auto a = enumerate_quartic(10, one);
  auto b = enumerate_quartic(10, four);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].cert == b[i].cert);
}

TEST_CASE("random quartic sampler yields simple connected quartic graphs") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Graph g = random_quartic(12, seed);
    CHECK(is_k_regular(g, 4));
    CHECK(is_connected(g));
  }
}
