#include <doctest.h>

#include <cmath>
#include <random>

#include "spectra.hpp"

using namespace specgap;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

Graph k5() {
  std::vector<Edge> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  return make_graph(5, e);
}

}  // namespace

TEST_CASE("path closed form over the whole range") {
  for (int h = 2; h <= 100; ++h) {
    CAPTURE(h);
    CHECK(std::fabs(mu_of(path(h)) - path_mu(h)) <= 1e-10);
  }
}

TEST_CASE("disconnected graphs have mu = 0") {
  Graph two = disjoint_union(cycle(3), cycle(3));
  CHECK(std::fabs(mu_of(two)) <= 1e-10);
}

TEST_CASE("report invariants on a family member") {
  Assembly a = build_G_n(11);
  auto rep = algebraic_connectivity(a);
  CHECK(std::fabs(rep.eigenvalues[0]) <= 1e-10);
  CHECK(rep.mu > 0.354);
  CHECK(rep.mu <= 0.355);  // published rounded-up value at n = 11
  double norm = 0.0, dot = 0.0;
  for (double v : rep.fiedler) {
    norm += v * v;
    dot += v;
  }
  CHECK(std::fabs(norm - 1.0) <= 1e-12);
  CHECK(std::fabs(dot) <= 1e-10);
  CHECK(rep.residual <= 1e-9);
  // sign convention: leftmost cell positive
  double head = 0.0;
  for (int v : a.cell_order.front()) head += rep.fiedler[v];
  CHECK(head > 0.0);
}

TEST_CASE("rayleigh quotient basics") {
  Graph g = cycle(6);
  std::vector<double> ones(6, 1.0);
  CHECK(rayleigh(g, ones) == 0.0);
  auto rep = algebraic_connectivity(g);
  CHECK(std::fabs(rayleigh(g, rep.fiedler) - rep.mu) <= 1e-9);
  std::vector<double> zero(6, 0.0);
  CHECK_THROWS_WITH_AS(rayleigh(g, zero), doctest::Contains("ZeroVector"), Error);
}

TEST_CASE("rayleigh of the Fiedler vector equals mu across families") {
  for (int n : {12, 17, 23}) {
    Assembly a = build_G_n(n);
    auto rep = algebraic_connectivity(a);
    CHECK(std::fabs(rayleigh(a.graph, rep.fiedler) - rep.mu) <= 1e-9);
  }
}

TEST_CASE("shifted bound dominates mu for random vectors") {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  for (Graph g : {cycle(6), build_G_n(13).graph}) {
    double mu = mu_of(g);
    for (int t = 0; t < 1000; ++t) {
      std::vector<double> x(g.n);
      for (auto& v : x) v = gauss(rng);
      auto sb = shifted_bound(g, x);
      CHECK(sb.bound >= mu - 1e-9);
    }
  }
}

TEST_CASE("shifted bound reduces to the Rayleigh quotient when x is balanced") {
  Graph g = cycle(8);
  std::vector<double> x{1, -1, 2, -2, 3, -3, 4, -4};
  auto sb = shifted_bound(g, x);
  CHECK(std::fabs(sb.delta) <= 1e-12);
  CHECK(sb.bound == doctest::Approx(rayleigh(g, x)).epsilon(1e-12));
  std::vector<double> ones(8, 1.0);
  CHECK_THROWS_WITH_AS(shifted_bound(g, ones), doctest::Contains("ConstantVector"), Error);
}

TEST_CASE("relaxation time") {
  CHECK(relaxation_time(k5()) == doctest::Approx(4.0 / 5.0).epsilon(1e-12));
  int n = 9;
  double expect = 2.0 / (2.0 - 2.0 * std::cos(2.0 * M_PI / n));
  CHECK(relaxation_time(cycle(n)) == doctest::Approx(expect).epsilon(1e-10));
  CHECK_THROWS_WITH_AS(relaxation_time(path(4)), doctest::Contains("NotRegular"), Error);
  CHECK_THROWS_WITH_AS(relaxation_time(disjoint_union(k5(), k5())),
                       doctest::Contains("Disconnected"), Error);
}

TEST_CASE("relaxation time grows like 4 n^2 / (4 pi^2) on the family") {
  double tau = relaxation_time(build_G_n(100).graph);
  double predicted = 4.0 * 100.0 * 100.0 / (4.0 * M_PI * M_PI);
  CHECK(tau / predicted > 0.7);
  CHECK(tau / predicted < 1.3);
}

TEST_CASE("cosine test vector: skewness, orthogonality and cut values") {
  Assembly h1 = build_H(1, 0, 0);
  auto x1 = test_vector_h00(h1, 1);
  CHECK(x1[h1.cut_vertices[0]] == doctest::Approx(std::cos(M_PI / 4.0)));
  CHECK(x1[h1.cut_vertices[1]] == doctest::Approx(std::cos(3.0 * M_PI / 4.0)));
  for (int m : {1, 2, 5, 10}) {
    Assembly h = build_H(m, 0, 0);
    auto x = test_vector_h00(h, m);
    double dot = 0.0;
    for (double v : x) dot += v;
    CHECK(std::fabs(dot) <= 1e-10);
    auto sigma = mirror_map(h);
    for (int v = 0; v < h.graph.n; ++v) CHECK(x[v] == doctest::Approx(-x[sigma[v]]).epsilon(1e-12));
  }
}

TEST_CASE("test vector stays below the closed form") {
  for (int m : {1, 5, 10}) {
    Assembly h = build_H(m, 0, 0);
    CHECK(rayleigh(h.graph, test_vector_h00(h, m)) <= closed_form_f(m) + 1e-12);
  }
}

TEST_CASE("the 4/25 path bound holds out to m = 50") {
  for (int m = 1; m <= 50; ++m) {
    CAPTURE(m);
    CHECK(mu_of(build_H(m, 4, 4).graph) >= 4.0 / 25.0 * path_mu(m + 11) - 1e-9);
  }
}

TEST_CASE("closed form: value, monotonicity, asymptotics") {
  CHECK(closed_form_f(6) < 0.046);
  for (int m = 1; m <= 100; ++m) CHECK(closed_form_f(m + 1) < closed_form_f(m));
  double m = 200;
  double scaled = closed_form_f(200) * 25.0 * m * m / (4.0 * M_PI * M_PI);
  CHECK(std::fabs(scaled - 1.0) < 0.05);
}
