#include <doctest.h>

#include "reports.hpp"
#include "verify.hpp"

using namespace specgap;

TEST_CASE("table2 battery") {
  auto r = verify_table2();
  CHECK(r.all_ok);
  REQUIRE(r.rows.size() == 30);
  CHECK(r.rows.front().n == 11);
  CHECK(r.rows.front().ceil3 == doctest::Approx(0.355));
  for (const auto& row : r.rows) CHECK(row.pass);
}

TEST_CASE("h00 battery at small m") {
  auto r = verify_h00(12);
  CHECK(r.all_ok);
  CHECK(r.rows.size() == 12);
  CHECK(r.f6_ok);
  CHECK(r.decreasing_ok);
}

TEST_CASE("sandwich battery out to m = 20") {
  auto r = verify_sandwich(20);
  CHECK(r.all_ok);
  CHECK(r.rows.size() == 20 * 25);
}

TEST_CASE("asymptotic report improves along 50, 100, 200") {
  auto r = verify_asymptotic({50, 100, 200});
  CHECK(r.all_ok);
  for (const auto& row : r.rows) {
    CHECK(row.ratio > 0.5);
    CHECK(row.ratio < 1.5);
    CHECK(row.af_ratio < 1.0);  // the generic regular-graph bound is slack here
  }
}

TEST_CASE("fits battery") {
  auto r = verify_fits();
  CHECK(r.all_ok);
  CHECK(r.rows.size() == 9);
}

TEST_CASE("structure battery over a short range") {
  auto r = verify_structure(11, 25, 2);
  CHECK(r.all_ok);
}

TEST_CASE("report formatting is stable") {
  CHECK(format_double(0.125) == "0.125");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  auto t = verify_table2();
  auto a = table2_csv(t), b = table2_csv(t);
  CHECK(a == b);
  CHECK(a.find("# specgap-table2-v1") == 0);
  CHECK(a.find("FAIL") == std::string::npos);
}
