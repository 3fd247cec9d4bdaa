#include <doctest.h>

#include <cmath>

#include "lemmas.hpp"
#include "spectra.hpp"

using namespace specgap;

TEST_CASE("formula catalog arithmetic") {
  // exact substitution: x3 = (mu^2 - 5mu + 2)/2 at mu = 0.1
  auto e3 = lemma_formula("E3", 0.1, {1.0});
  CHECK(e3[1] == doctest::Approx((0.01 - 0.5 + 2.0) / 2.0).epsilon(1e-15));

  // mu = 0 forces constancy on the long-end gadget
  auto e1 = lemma_formula("E1", 0.0, {1.0});
  for (int i = 0; i < 3; ++i) CHECK(e1[i] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(lemma_formula("E9", 0.1, {1.0}), doctest::Contains("UnknownFormula"),
                       Error);
  CHECK_THROWS_WITH_AS(lemma_formula("E1", 0.2, {1.0}), doctest::Contains("MuOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(lemma_formula("H6", 0.059, {1.0}), doctest::Contains("MuOutOfRange"),
                       Error);
}

TEST_CASE("formula values satisfy the eigen-equations on the gadget") {
  // H1 with generic boundary data: the defining linear system must hold
  double mu = 0.05, xr = 1.0, far = 0.0;
  auto v = lemma_formula("H1", mu, {xr, far});
  double x1 = v[0], x2 = v[1];
  // cut vertex: mu x1 = 4 x1 - 2 xr - 2 x2
  CHECK(std::fabs(mu * x1 - (4 * x1 - 2 * xr - 2 * x2)) <= 1e-12);
  // pair vertex: mu x2 = 4 x2 - x1 - x2 - 2 far
  CHECK(std::fabs(mu * x2 - (3 * x2 - x1 - 2 * far)) <= 1e-12);

  auto h4 = lemma_formula("H4", 0.07, {1.0, 0.2});
  double a = h4[0], b = h4[1], c = h4[2], d = h4[3];
  CHECK(std::fabs(0.07 * a - (3 * a - 2 * 1.0 - b)) <= 1e-12);
  CHECK(std::fabs(0.07 * b - (4 * b - 2 * a - 2 * c)) <= 1e-12);
  CHECK(std::fabs(0.07 * c - (3 * c - b - d - 0.2)) <= 1e-12);
  CHECK(std::fabs(0.07 * d - (4 * d - 2 * c - 2 * 0.2)) <= 1e-12);
}

TEST_CASE("lemma names are exposed") {
  auto names = lemma_names();
  CHECK(names.size() == 9);
  CHECK_THROWS_WITH_AS(run_lemma_experiment("no-such-lemma"), doctest::Contains("UnknownKind"),
                       Error);
}

TEST_CASE("every built-in instance verifies its hypotheses and decreases mu") {
  for (const auto& name : lemma_names()) {
    for (const auto& row : run_lemma_experiment(name)) {
      CAPTURE(row.lemma);
      CAPTURE(row.instance);
      CHECK(row.hypothesis_status == "ok");
      CHECK(row.pass);
      if (row.type == "replace") {
        CHECK(row.criterion < 0.0);
        CHECK(row.bound_after < row.mu_before);
        CHECK(row.mu_after < row.mu_before);
      } else {
        CHECK(row.margin > 1e-8);
      }
    }
  }
}

TEST_CASE("the d0-m3 replacement lands on the family member") {
  for (const auto& row : run_lemma_experiment("d0-m3")) {
    if (row.type != "replace") continue;
    // splicing the head onto the shorter end yields exactly the family graph
    double family_mu = mu_of(build_G_n(row.n).graph);
    CHECK(row.mu_after == doctest::Approx(family_mu).epsilon(1e-9));
  }
}
