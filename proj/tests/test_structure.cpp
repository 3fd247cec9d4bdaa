#include <doctest.h>

#include <functional>

#include "fiedler.hpp"
#include "partition.hpp"
#include "spectra.hpp"

using namespace specgap;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph k5() {
  std::vector<Edge> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  return make_graph(5, e);
}

// all partitions of 0..n-1, for the brute-force coarseness check
void each_partition(int n, const std::function<void(const Partition&)>& fn) {
  std::vector<int> cell_of(n, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      Partition p(used);
      for (int i = 0; i < n; ++i) p[cell_of[i]].push_back(i);
      fn(p);
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      cell_of[v] = c;
      rec(v + 1, used + (c == used ? 1 : 0));
    }
  };
  rec(0, 0);
}

}  // namespace

TEST_CASE("equitable partition basics") {
  Graph g = build_G_n(16).graph;
  Partition unit{{}};
  for (int v = 0; v < g.n; ++v) unit[0].push_back(v);
  CHECK(is_equitable(g, unit));  // regular graph

  Partition singletons;
  for (int v = 0; v < g.n; ++v) singletons.push_back({v});
  CHECK(is_equitable(g, singletons));

  Assembly a = build_G_n(16);
  CHECK(is_equitable(a.graph, a.cell_order));

  Partition bad{{0, 1}};
  CHECK_THROWS_WITH_AS(is_equitable(g, bad), doctest::Contains("NotAPartition"), Error);
}

TEST_CASE("coarsest equitable partition") {
  CHECK(coarsest_equitable(k5()).size() == 1);

  auto p4 = coarsest_equitable(path(4));
  CHECK(p4.size() == 2);  // ends vs middles

  // on a family member it is no finer than the structural cells merged by
  // the mirror symmetry, hence at most as many cells
  Assembly a = build_G_n(11);
  auto coarse = coarsest_equitable(a.graph);
  CHECK(coarse.size() <= a.cell_order.size());
}

TEST_CASE("coarsest equitable is coarsest, by brute force on small graphs") {
  for (const Graph& g : {path(5), complement(path(5)), build_H(0, 0, 0).graph}) {
    if (g.n > 8) continue;
    auto coarse = coarsest_equitable(g);
    each_partition(g.n, [&](const Partition& p) {
      if (!is_equitable(g, p)) return;
      CHECK(p.size() >= coarse.size());
    });
  }
}

TEST_CASE("family Fiedler vectors: constant cells, decreasing, one sign change") {
  for (int n : {11, 12, 13, 14, 15, 16, 20, 31, 47}) {
    CAPTURE(n);
    auto r = fiedler_structure(build_G_n(n));
    if (r.indeterminate) continue;
    CHECK(r.cell_constant);
    CHECK(r.max_spread <= 1e-7);
    CHECK(r.decreasing);
    CHECK(r.sign_changes == 1);
    CHECK(r.exceptional_cells.empty());
  }
}

TEST_CASE("cell structure persists out to n = 200") {
  for (int n = 101; n <= 200; ++n) {
    CAPTURE(n);
    auto r = fiedler_structure(build_G_n(n));
    if (r.indeterminate) continue;
    CHECK(r.cell_constant);
    CHECK(r.decreasing);
    CHECK(r.sign_changes == 1);
  }
}

TEST_CASE("constant vector: no sign change, not decreasing") {
  Assembly a = build_G_n(11);
  std::vector<double> ones(a.graph.n, 1.0);
  auto r = fiedler_structure(a.graph, ones, a.cell_order);
  CHECK(r.sign_changes == 0);
  CHECK_FALSE(r.decreasing);
  CHECK(r.cell_constant);
}

TEST_CASE("palindromic members have skew-symmetric Fiedler vectors") {
  for (int m : {1, 2, 3}) {
    for (int i = 0; i <= 4; ++i) {
      Assembly h = build_H(m, i, i);
      auto r = fiedler_structure(h);
      CAPTURE(m);
      CAPTURE(i);
      if (r.indeterminate) continue;
      REQUIRE(r.skew_symmetric.has_value());
      CHECK(*r.skew_symmetric);
      CHECK(r.skew_defect <= 1e-7);
    }
  }
}

TEST_CASE("dimension mismatches are rejected") {
  Assembly a = build_G_n(11);
  std::vector<double> short_vec(3, 0.0);
  CHECK_THROWS_WITH_AS(fiedler_structure(a.graph, short_vec, a.cell_order),
                       doctest::Contains("DimensionMismatch"), Error);
}
