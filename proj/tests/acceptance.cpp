// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each check pins its tolerance in code; timings are reported per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "lemmas.hpp"
#include "reports.hpp"
#include "spectra.hpp"
#include "sturm.hpp"
#include "verify.hpp"

using namespace specgap;

namespace {

int failures = 0;

void criterion(int index, const std::string& title, const std::function<bool(std::string&)>& run) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d [%s] %-38s (%.2fs)%s%s\n", index, ok ? "PASS" : "FAIL", title.c_str(),
              seconds, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

}  // namespace

int main() {
  criterion(1, "rounded-up mu values for n = 11..40", [](std::string& detail) {
    auto r = verify_table2();
    for (const auto& row : r.rows)
      if (!row.pass) detail = "first failure at n = " + std::to_string(row.n);
    return r.all_ok;
  });

  criterion(2, "path closed form for h = 2..100", [](std::string& detail) {
    for (int h = 2; h <= 100; ++h) {
      double err = std::fabs(mu_of(path_graph(h)) - path_mu(h));
      if (err > 1e-10) {
        detail = "h = " + std::to_string(h);
        return false;
      }
    }
    return true;
  });

  criterion(3, "cosine test vector for m = 1..50", [](std::string& detail) {
    auto r = verify_h00(50);
    if (!r.f6_ok) detail = "f(6) bound failed";
    for (const auto& row : r.rows)
      if (!row.pass) detail = "m = " + std::to_string(row.m);
    return r.all_ok;
  });

  criterion(4, "two-sided bounds for m = 1..12", [](std::string& detail) {
    auto r = verify_sandwich(12);
    for (const auto& row : r.rows)
      if (!row.pass)
        detail = "m,i,j = " + std::to_string(row.m) + "," + std::to_string(row.i) + "," +
                 std::to_string(row.j);
    return r.all_ok;
  });

  criterion(5, "asymptotic ratio at n = 100 and 500", [](std::string& detail) {
    auto r = verify_asymptotic({100, 500});
    double at100 = r.rows[0].ratio, at500 = r.rows[1].ratio;
    detail = "ratio(100) = " + format_double(at100) + ", ratio(500) = " + format_double(at500);
    return at500 >= 0.90 && at500 <= 1.10 && std::fabs(at500 - 1.0) < std::fabs(at100 - 1.0);
  });

  criterion(6, "Fiedler structure for n = 11..100", [](std::string& detail) {
    auto r = verify_structure(11, 100, 8);
    for (const auto& row : r.rows)
      if (!row.pass) detail = row.family + " n = " + std::to_string(row.n);
    return r.all_ok;
  });

  criterion(7, "fit pairs recovered and checked", [](std::string& detail) {
    auto r = verify_fits();
    for (const auto& row : r.rows)
      if (!row.found || !row.witness_ok) detail = row.candidate + " fits " + row.base;
    return r.all_ok;
  });

  criterion(8, "replacement lemma experiments", [](std::string& detail) {
    bool ok = true;
    for (const auto& name : lemma_names()) {
      for (const auto& row : run_lemma_experiment(name)) {
        bool row_ok;
        if (row.type == "compare") {
          row_ok = row.margin > 1e-8;
        } else {
          row_ok = row.hypothesis_status == "ok" && row.criterion < 0.0 &&
                   row.bound_after < row.mu_before;
        }
        if (!row_ok) {
          ok = false;
          detail = row.lemma + " / " + row.instance + " (" + row.hypothesis_status + ")";
        }
      }
    }
    return ok;
  });

  criterion(9, "polynomial roots and sign statements", [](std::string& detail) {
    auto r = verify_root_claims();
    for (const auto& c : r.claims)
      if (!c.matched) detail = c.id;
    for (const auto& f : r.facts)
      if (!f.holds) detail = f.id;
    return r.all_ok;
  });

  criterion(10, "census certification at n = 11, 12, 13", [](std::string& detail) {
    for (int n = 5; n <= 8; ++n) {
      auto census = enumerate_quartic(n);
      auto oracle = complement_oracle(n);
      if (census.size() != oracle.size()) {
        detail = "oracle mismatch at n = " + std::to_string(n);
        return false;
      }
      for (size_t i = 0; i < census.size(); ++i)
        if (census[i].cert != oracle[i]) {
          detail = "oracle mismatch at n = " + std::to_string(n);
          return false;
        }
    }
    for (int n : {11, 12, 13}) {
      auto census = enumerate_quartic(n);
      std::set<CanonicalCert> certs;
      for (const auto& e : census) certs.insert(e.cert);
      // completeness audit: random members of the class must be present
      for (std::uint64_t seed = 1; seed <= 50; ++seed)
        if (!certs.count(canonical_cert(random_quartic(n, seed * 104729 + n)))) {
          detail = "audit miss at n = " + std::to_string(n);
          return false;
        }
      auto minimal = find_minimal(census);
      bool unique = minimal.size() == 1;
      bool matches = unique && minimal.front().cert == canonical_cert(build_G_n(n).graph);
      bool template_ok = unique && matches_family_template(minimal.front().graph);
      if (!(unique && matches && template_ok)) {
        detail = "n = " + std::to_string(n) + ": census " + std::to_string(census.size()) +
                 ", minimal " + std::to_string(minimal.size());
        return false;
      }
      auto structure = fiedler_structure(build_G_n(n));
      if (!structure.indeterminate &&
          !(structure.cell_constant && structure.decreasing && structure.sign_changes == 1)) {
        detail = "minimal graph structure check failed at n = " + std::to_string(n);
        return false;
      }
    }
    return true;
  });

  if (failures) {
    std::printf("%d criteria FAILED\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
