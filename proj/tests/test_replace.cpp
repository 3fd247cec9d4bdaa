#include <doctest.h>

#include <cmath>

#include "replace.hpp"
#include "spectra.hpp"

using namespace specgap;

TEST_CASE("identity replacement changes nothing") {
  Assembly h00 = build_H(2, 0, 0);
  Block d0 = block(BlockKind::D0);
  auto w = find_fit_partition(d0, d0, 5);
  REQUIRE(w.has_value());
  auto out = replace_end_block(h00, d0, *w);
  CHECK(std::fabs(out.criterion) <= 1e-12);
  CHECK(out.mu_after == doctest::Approx(out.mu_before).epsilon(1e-12));
  CHECK(std::fabs(out.epsilon) <= 1e-12);
}

TEST_CASE("upper-end replacements: growing the end block cannot raise mu") {
  for (int m : {2, 4}) {
    Assembly h00 = build_H(m, 0, 0);
    double mu00 = mu_of(h00.graph);
    for (auto kind : {BlockKind::D1, BlockKind::D2, BlockKind::D3, BlockKind::D4}) {
      Block dp = block(kind);
      auto w = find_fit_partition(block(BlockKind::D0), dp, 5);
      REQUIRE(w.has_value());
      auto out = replace_end_block(h00, dp, *w);
      CAPTURE(m);
      CAPTURE(dp.kind);
      CHECK(out.bound <= mu00 + 1e-9);
      CHECK(out.mu_after <= out.bound + 1e-9);
      CHECK(out.epsilon >= -1e-12);  // Cauchy-Schwarz step
      CHECK(std::fabs(out.ell - out.ell_prime) <= 1e-12);
      // the result is the family member with the same middles and new end
      double expect = mu_of(build_H(m, int(kind) - int(BlockKind::D0), 0).graph);
      CHECK(out.mu_after == doctest::Approx(expect).epsilon(1e-9));
    }
  }
}

TEST_CASE("chained replacements drive mu down to the 4,4 pair") {
  int m = 3;
  double mu43 = mu_of(build_H(m, 4, 3).graph);
  double mu44 = mu_of(build_H(m, 4, 4).graph);
  // D4 fits D3: replacing the D3 end by D4 cannot raise mu
  Assembly h34 = build_H(m, 3, 4);
  auto w = find_fit_partition(block(BlockKind::D3), block(BlockKind::D4), 5);
  REQUIRE(w.has_value());
  auto out = replace_end_block(h34, block(BlockKind::D4), *w);
  CHECK(out.bound <= mu43 + 1e-9);
  CHECK(out.mu_after == doctest::Approx(mu44).epsilon(1e-9));
}

TEST_CASE("a witness for the wrong block pair is rejected") {
  Assembly h00 = build_H(1, 0, 0);
  auto w = find_fit_partition(block(BlockKind::D0), block(BlockKind::D2), 5);
  REQUIRE(w.has_value());
  CHECK_THROWS_WITH_AS(replace_end_block(h00, block(BlockKind::D1), *w),
                       doctest::Contains("FitViolated"), Error);
}

TEST_CASE("splice swaps a gadget for its reversal") {
  // moving the off-family middle block one slot leftward must keep the
  // graph quartic and connected
  Assembly host = assemble({block(BlockKind::D0), block(BlockKind::M0), block(BlockKind::M1),
                            block(BlockKind::M0), block(BlockKind::M0),
                            mirror(block(BlockKind::D0))});
  Gadget h1 = gadget("H1"), h1p = gadget("H1'");
  std::vector<int> embed;
  for (int v : {3, 4}) embed.push_back(host.local_to_global[1][v]);
  embed.push_back(host.cut_vertices[1]);
  for (int v : {1, 2, 3, 4}) embed.push_back(host.local_to_global[2][v]);
  check_embedding(host.graph, h1, embed);
  std::vector<int> new_embed;
  Graph spliced = splice_gadget(host.graph, h1, embed, h1p, &new_embed);
  CHECK(spliced.n == host.graph.n);
  CHECK(is_k_regular(spliced, 4));
  CHECK(is_connected(spliced));
  CHECK(spliced.edges.size() == host.graph.edges.size());

  // breaking the induced property must be caught
  std::vector<int> bad = embed;
  std::swap(bad[0], bad[2]);
  CHECK_THROWS_WITH_AS(check_embedding(host.graph, h1, bad), doctest::Contains("GadgetNotFound"),
                       Error);
}
