// Exercises the shared-library surface exactly as an embedder would.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "specgap/specgap.h"

static int failures = 0;

#define REQUIRE(cond)                                                     \
  do {                                                                    \
    if (!(cond)) {                                                        \
      std::fprintf(stderr, "[FAIL] %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                         \
    }                                                                     \
  } while (0)

static void test_graph_roundtrip() {
  sg_graph* g = nullptr;
  const int edges[] = {0, 1, 1, 2, 0, 2};
  REQUIRE(sg_graph_create(3, edges, 3, &g) == SG_OK);
  REQUIRE(sg_graph_order(g) == 3);
  REQUIRE(sg_graph_edge_count(g) == 3);
  REQUIRE(sg_graph_is_connected(g) == 1);
  REQUIRE(sg_graph_is_regular(g, 2) == 1);

  char* text = nullptr;
  REQUIRE(sg_graph_to_graph6(g, &text) == SG_OK);
  REQUIRE(std::strcmp(text, "Bw") == 0);
  sg_graph* back = nullptr;
  REQUIRE(sg_graph_from_graph6(text, &back) == SG_OK);
  REQUIRE(sg_graph_edge_count(back) == 3);
  sg_string_free(text);

  char* json = nullptr;
  REQUIRE(sg_graph_to_json(g, &json) == SG_OK);
  sg_graph* from_json = nullptr;
  REQUIRE(sg_graph_from_json(json, &from_json) == SG_OK);
  REQUIRE(sg_graph_order(from_json) == 3);
  sg_string_free(json);

  sg_graph_free(from_json);
  sg_graph_free(back);
  sg_graph_free(g);
}

static void test_errors() {
  sg_graph* g = nullptr;
  const int loop[] = {0, 0};
  REQUIRE(sg_graph_create(2, loop, 1, &g) == SG_ERR_ARGUMENT);
  REQUIRE(sg_graph_from_graph6("B", &g) == SG_ERR_PARSE);
  REQUIRE(std::strlen(sg_last_error()) > 0);
  REQUIRE(sg_family_gn(10, &g) == SG_ERR_ASSEMBLY);
  REQUIRE(sg_block_graph("D9", &g) == SG_ERR_UNKNOWN_KIND);
  sg_report* r = nullptr;
  REQUIRE(sg_certify(15, 0, 0, &r) == SG_ERR_CAP);
  REQUIRE(sg_verify_lemma("bogus", &r) == SG_ERR_UNKNOWN_KIND);
}

static void test_families_and_spectra() {
  sg_graph* g = nullptr;
  REQUIRE(sg_family_gn(11, &g) == SG_OK);
  REQUIRE(sg_graph_order(g) == 11);
  double mu = 0.0;
  REQUIRE(sg_mu(g, &mu) == SG_OK);
  REQUIRE(mu > 0.354 && mu <= 0.355);
  double tau = 0.0;
  REQUIRE(sg_relaxation_time(g, &tau) == SG_OK);
  REQUIRE(std::fabs(tau - 4.0 / mu) < 1e-9);

  char* cert1 = nullptr;
  char* cert2 = nullptr;
  REQUIRE(sg_graph_canonical_form(g, &cert1) == SG_OK);
  sg_graph* h = nullptr;
  REQUIRE(sg_family_h(0, 0, 0, &h) == SG_OK);
  REQUIRE(sg_graph_canonical_form(h, &cert2) == SG_OK);
  REQUIRE(std::strcmp(cert1, cert2) == 0);  // H_{0,0} with no middles is the order-11 member
  sg_string_free(cert1);
  sg_string_free(cert2);
  sg_graph_free(h);

  sg_report* rep = nullptr;
  REQUIRE(sg_spectral_report(g, &rep) == SG_OK);
  REQUIRE(std::strstr(sg_report_text(rep), "\"mu\":") != nullptr);
  REQUIRE(std::strcmp(sg_report_format(rep), "json") == 0);
  sg_report_free(rep);
  sg_graph_free(g);

  sg_graph* gadget = nullptr;
  REQUIRE(sg_gadget_graph("D0M3", &gadget) == SG_OK);
  REQUIRE(sg_graph_order(gadget) == 12);
  sg_graph_free(gadget);

  const char* bricks[] = {"D0'", "M0''", "D0'~"};
  sg_graph* lcb = nullptr;
  REQUIRE(sg_long_block_graph(bricks, 3, "complete", &lcb) == SG_OK);
  REQUIRE(sg_graph_order(lcb) == 14);
  REQUIRE(sg_graph_is_regular(lcb, 4) == 1);
  sg_graph_free(lcb);
}

static void test_reports() {
  sg_report* r = nullptr;
  REQUIRE(sg_verify_table2(&r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  REQUIRE(std::strstr(sg_report_text(r), "# specgap-table2-v1") != nullptr);
  std::string first = sg_report_text(r);
  sg_report_free(r);
  r = nullptr;
  REQUIRE(sg_verify_table2(&r) == SG_OK);
  REQUIRE(first == sg_report_text(r));  // byte-identical reruns
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_verify_roots(&r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_verify_h00(10, &r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_verify_fits(&r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_report_structure_gn(13, 0, 0, &r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_verify_lemma("end-d3", &r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  int ns[] = {50, 100};
  REQUIRE(sg_verify_asymptotic(ns, 2, &r) == SG_OK);
  REQUIRE(sg_report_passed(r) == 1);
  sg_report_free(r);

  r = nullptr;
  REQUIRE(sg_certify(9, 0, 0, &r) == SG_OK);
  REQUIRE(std::strstr(sg_report_text(r), "\"census_size\":16") != nullptr);
  sg_report_free(r);
}

int main() {
  test_graph_roundtrip();
  test_errors();
  test_families_and_spectra();
  test_reports();
  if (failures) {
    std::fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  std::puts("all C API checks passed");
  return 0;
}
