#include <doctest.h>

#include "assembly.hpp"
#include "canonical.hpp"
#include "gadgets.hpp"
#include "partition.hpp"

using namespace specgap;

TEST_CASE("two end blocks make the order-11 member") {
  Assembly a = assemble({block(BlockKind::D0), mirror(block(BlockKind::D0))});
  CHECK(a.graph.n == 11);
  CHECK(is_k_regular(a.graph, 4));
  CHECK(is_connected(a.graph));
  CHECK(a.cut_vertices.size() == 1);
}

TEST_CASE("assembly counts") {
  Assembly a = assemble({block(BlockKind::D0), block(BlockKind::M0), mirror(block(BlockKind::D0))});
  CHECK(a.graph.n == 16);
  CHECK(a.cut_vertices.size() == 2);

  Assembly b = assemble({block(BlockKind::D1), mirror(block(BlockKind::D2))});
  CHECK(b.graph.n == 14);
}

TEST_CASE("bad attachment sides are rejected") {
  CHECK_THROWS_WITH_AS(assemble({block(BlockKind::D0), block(BlockKind::D0)}),
                       doctest::Contains("IncompatibleAttachment"), Error);
  CHECK_THROWS_WITH_AS(assemble({block(BlockKind::M0), mirror(block(BlockKind::D0))}),
                       doctest::Contains("IncompatibleAttachment"), Error);
}

TEST_CASE("family members have the right order and regularity") {
  for (int n = 11; n <= 60; ++n) {
    Assembly a = build_G_n(n);
    CAPTURE(n);
    CHECK(a.graph.n == n);
    CHECK(is_k_regular(a.graph, 4));
    CHECK(is_connected(a.graph));
    CHECK(int(a.cut_vertices.size()) == int(a.blocks.size()) - 1);
  }
  for (int n = 61; n <= 500; ++n) CHECK(build_G_n(n).graph.n == n);
  CHECK_THROWS_WITH_AS(build_G_n(10), doctest::Contains("OrderTooSmall"), Error);
}

TEST_CASE("end pair selection per residue") {
  CHECK(build_G_n(11).blocks.front().kind == "D0");
  CHECK(build_G_n(11).blocks.back().kind == "D0~");
  CHECK(build_G_n(12).blocks.back().kind == "D1~");
  CHECK(build_G_n(13).blocks.front().kind == "D1");
  CHECK(build_G_n(14).blocks.back().kind == "D2~");
  CHECK(build_G_n(15).blocks.back().kind == "D4~");
  CHECK(build_G_n(21).blocks.size() == 4);  // two middles
}

TEST_CASE("H family orders") {
  CHECK(build_H(3, 0, 0).graph.n == 5 * 3 + 11);
  CHECK(build_H(3, 4, 4).graph.n == 5 * 3 + 19);
  CHECK(build_H(0, 2, 2).graph.n == 15);
}

TEST_CASE("structural cells form an equitable partition of the glued graph") {
  for (int n : {11, 12, 13, 14, 15, 16, 26}) {
    Assembly a = build_G_n(n);
    CAPTURE(n);
    CHECK(is_equitable(a.graph, a.cell_order));
  }
  for (int i = 0; i <= 4; ++i) {
    Assembly h = build_H(2, i, i);
    CHECK(is_equitable(h.graph, h.cell_order));
  }
}

TEST_CASE("long blocks follow the grammar") {
  auto end = build_long_block(std::vector<std::string>{"D0'", "M0'~"}, LongBlockType::End);
  REQUIRE(end.block.has_value());
  CHECK(end.block->graph.n == 10);
  CHECK_FALSE(end.block->left_attach.has_value());
  CHECK(end.block->right_attach.has_value());

  auto mid = build_long_block(std::vector<std::string>{"M1'", "M0''", "M2'~"}, LongBlockType::Middle);
  REQUIRE(mid.block.has_value());
  CHECK(mid.block->graph.n == 7 + 4 + 8);
  CHECK(mid.block->left_attach.has_value());
  CHECK(mid.block->right_attach.has_value());

  auto complete = build_long_block(std::vector<std::string>{"D0'", "D3'~"}, LongBlockType::Complete);
  REQUIRE(complete.graph.has_value());
  CHECK(complete.graph->n == 13);
  CHECK(is_k_regular(*complete.graph, 4));

  CHECK_THROWS_WITH_AS(build_long_block(std::vector<std::string>{"D0'", "D0'"}, LongBlockType::Complete),
                       doctest::Contains("GrammarViolation"), Error);
  CHECK_THROWS_WITH_AS(build_long_block(std::vector<std::string>{"D0'", "M1'", "M0'~"}, LongBlockType::End),
                       doctest::Contains("GrammarViolation"), Error);
  CHECK_THROWS_WITH_AS(build_long_block(std::vector<std::string>{"D0'"}, LongBlockType::End),
                       doctest::Contains("GrammarViolation"), Error);
}

TEST_CASE("the D4 fixture equals the closed two-brick long end block") {
  auto lb = build_long_block(std::vector<std::string>{"D0'", "M0'~"}, LongBlockType::End);
  CHECK(canonical_cert(lb.block->graph) == canonical_cert(block(BlockKind::D4).graph));
}

TEST_CASE("assemblies built from long blocks glue to quartic graphs") {
  auto leb = build_long_block(std::vector<std::string>{"D0'", "M0''", "M0'~"}, LongBlockType::End);
  Assembly a = assemble({*leb.block, mirror(block(BlockKind::D0))});
  CHECK(a.graph.n == 19);
  CHECK(is_k_regular(a.graph, 4));
}

TEST_CASE("mirror map of palindromic assemblies") {
  for (int m : {1, 2, 3}) {
    for (int i : {0, 4}) {
      Assembly h = build_H(m, i, i);
      CAPTURE(m);
      CAPTURE(i);
      REQUIRE(is_palindromic(h));
      auto sigma = mirror_map(h);
      for (int v = 0; v < h.graph.n; ++v) CHECK(sigma[sigma[v]] == v);
      for (auto [u, v] : h.graph.edges) CHECK(has_edge(h.graph, sigma[u], sigma[v]));
    }
  }
}

TEST_CASE("asymmetric ends are not palindromic") {
  Assembly g12 = build_G_n(12);
  CHECK_FALSE(is_palindromic(g12));
  CHECK_THROWS_WITH_AS(mirror_map(g12), doctest::Contains("NotPalindromic"), Error);
}

TEST_CASE("gadget fixtures") {
  CHECK(gadget("D0M3").graph.n == 12);
  CHECK(gadget("H1").graph.n == 7);
  CHECK(gadget("H5'").graph.n == gadget("H5").graph.n);
  CHECK(gadget("H6'").graph.n == gadget("H6").graph.n);
  CHECK(gadget("H6'").graph.edges.size() == gadget("H6").graph.edges.size());
  CHECK_THROWS_WITH_AS(gadget("H9"), doctest::Contains("UnknownKind"), Error);
  // replacement pairs preserve vertex, edge, and slot counts
  for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
           {"HE1", "HE1'"}, {"HE2", "HE2'"}, {"HE3", "HE3'"}, {"H1", "H1'"}, {"H2", "H2'"},
           {"H3", "H3'"}, {"H4", "H4'"}, {"H5", "H5'"}, {"H6", "H6'"}}) {
    Gadget ga = gadget(a), gb = gadget(b);
    CAPTURE(a);
    CHECK(ga.graph.n == gb.graph.n);
    CHECK(ga.graph.edges.size() == gb.graph.edges.size());
    CHECK(ga.slot_total() == gb.slot_total());
  }
}
