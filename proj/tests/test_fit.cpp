#include <doctest.h>

#include "fit.hpp"

using namespace specgap;

TEST_CASE("published partitions witness D1 fits D0") {
  // triangle head, pair, attachment / K4 head, pair+attachment-side triple, attachment
  Block d0 = block(BlockKind::D0), d1 = block(BlockKind::D1);
  FitWitness w;
  w.pi = {{0, 1, 2}, {3, 4}, {5}};
  w.pi_prime = {{0, 1, 2}, {3, 4, 5}, {6}};
  w.edge_counts = cross_edge_counts(d0.graph, w.pi);
  CHECK(check_fit(d0, d1, w));
}

TEST_CASE("reflexivity with equal cells") {
  Block d0 = block(BlockKind::D0);
  FitWitness w;
  w.pi = {{0, 1, 2}, {3, 4}, {5}};
  w.pi_prime = w.pi;
  w.edge_counts = cross_edge_counts(d0.graph, w.pi);
  CHECK(check_fit(d0, d0, w));
}

TEST_CASE("a non-equitable base partition fails condition (i)") {
  Block d0 = block(BlockKind::D0), d1 = block(BlockKind::D1);
  FitWitness w;
  w.pi = {{0, 1, 3}, {2, 4}, {5}};  // mixes the head with the pair
  w.pi_prime = {{0, 1, 2}, {3, 4, 5}, {6}};
  CHECK_FALSE(check_fit(d0, d1, w));
}

TEST_CASE("search recovers the published fit pairs") {
  auto pairs = std::initializer_list<std::pair<BlockKind, BlockKind>>{
      {BlockKind::D0, BlockKind::D1}, {BlockKind::D0, BlockKind::D2},
      {BlockKind::D0, BlockKind::D3}, {BlockKind::D0, BlockKind::D4},
      {BlockKind::D1, BlockKind::D2}, {BlockKind::D1, BlockKind::D3},
      {BlockKind::D1, BlockKind::D4}, {BlockKind::D2, BlockKind::D3},
      {BlockKind::D3, BlockKind::D4}};
  for (auto [base, cand] : pairs) {
    Block d = block(base), dp = block(cand);
    CAPTURE(d.kind);
    CAPTURE(dp.kind);
    auto w = find_fit_partition(d, dp, 5);
    REQUIRE(w.has_value());
    CHECK(check_fit(d, dp, *w));
    // attachment vertices share the last cell
    CHECK(w->pi.back() == std::vector<int>{*d.right_attach});
    bool found = false;
    for (int v : w->pi_prime.back())
      if (v == *dp.right_attach) found = true;
    CHECK(found);
  }
}

TEST_CASE("the larger block cannot fit into the smaller one") {
  Block d4 = block(BlockKind::D4), d0 = block(BlockKind::D0);
  CHECK_FALSE(find_fit_partition(d4, d0, 5).has_value());
}

TEST_CASE("oversized blocks raise SearchSpaceExceeded") {
  Block big = block(BlockKind::D4);
  Block fake = big;
  fake.graph = disjoint_union(big.graph, make_graph(3, {}));
  CHECK_THROWS_WITH_AS(find_fit_partition(fake, big, 4),
                       doctest::Contains("SearchSpaceExceeded"), Error);
}
