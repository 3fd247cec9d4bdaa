#include <doctest.h>

#include <random>

#include "canonical.hpp"

using namespace specgap;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph random_graph(int n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return make_graph(n, e);
}

}  // namespace

TEST_CASE("relabeling invariance on C5") {
  Graph c5 = cycle(5);
  auto cert = canonical_cert(c5);
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) CHECK(canonical_cert(relabel(c5, random_perm(5, rng))) == cert);
}

TEST_CASE("C6 vs two triangles") {
  Graph c6 = cycle(6);
  Graph triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_cert(c6) != canonical_cert(triangles));
}

TEST_CASE("the two quartic graphs on 7 vertices have different certificates") {
  Graph a = complement(cycle(7));
  Graph b = complement(make_graph(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}}));
  CHECK(is_k_regular(a, 4));
  CHECK(is_k_regular(b, 4));
  CHECK(canonical_cert(a) != canonical_cert(b));
}

TEST_CASE("certificate labeling reproduces the certificate graph") {
  std::mt19937 rng(3);
  Graph g = random_graph(8, 0.4, rng);
  auto perm = canonical_labeling(g);
  CHECK(canonical_cert(relabel(g, perm)) == canonical_cert(g));
}

TEST_CASE("agreement with brute force on random pairs") {
  // both directions: relabelings must collide, perturbed graphs must not
  std::mt19937 rng(11);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    int n = 5 + int(rng() % 4);  // 5..8
    Graph a = random_graph(n, 0.5, rng);
    Graph b;
    if (t % 2 == 0) {
      b = relabel(a, random_perm(n, rng));
    } else {
      b = random_graph(n, 0.5, rng);
    }
    bool iso_cert = canonical_cert(a) == canonical_cert(b);
    bool iso_brute = brute_force_isomorphic(a, b);
    CHECK(iso_cert == iso_brute);
    ++checked;
  }
  CHECK(checked == 1000);
}
