#include "specgap/specgap.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "assembly.hpp"
#include "canonical.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "gadgets.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "reports.hpp"
#include "spectra.hpp"
#include "verify.hpp"

using namespace specgap;

extern "C" {
struct sg_graph {
  Graph g;
};
struct sg_report {
  std::string text;
  std::string format;
  bool passed = false;
};
}

namespace {

thread_local std::string g_last_error;
int g_threads = 0;

sg_status status_of(const Error& e) {
  switch (e.code()) {
    case Err::LoopEdge:
    case Err::IndexOutOfRange:
    case Err::InvalidArgument:
    case Err::ZeroVector:
    case Err::ConstantVector:
    case Err::DimensionMismatch:
    case Err::NotAPartition:
      return SG_ERR_ARGUMENT;
    case Err::ParseError:
      return SG_ERR_PARSE;
    case Err::UnknownKind:
    case Err::UnknownFormula:
    case Err::GadgetNotFound:
      return SG_ERR_UNKNOWN_KIND;
    case Err::IncompatibleAttachment:
    case Err::NotQuarticAfterGlue:
    case Err::OrderTooSmall:
    case Err::GrammarViolation:
    case Err::NotPalindromic:
      return SG_ERR_ASSEMBLY;
    case Err::NotRegular:
      return SG_ERR_NOT_REGULAR;
    case Err::Disconnected:
      return SG_ERR_DISCONNECTED;
    case Err::ConvergenceFailure:
      return SG_ERR_SOLVER;
    case Err::OrderCapExceeded:
      return SG_ERR_CAP;
    case Err::SearchSpaceExceeded:
      return SG_ERR_SEARCH;
    case Err::HypothesisUnmet:
    case Err::MuOutOfRange:
      return SG_ERR_HYPOTHESIS;
    case Err::FitViolated:
    case Err::CellNotConstant:
    case Err::ClaimMismatch:
      return SG_ERR_CHECK_FAILED;
  }
  return SG_ERR_INTERNAL;
}

template <typename Fn>
sg_status guarded(Fn&& fn) {
  try {
    fn();
    return SG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sg_report* make_report(std::string text, std::string format, bool passed) {
  auto* r = new sg_report;
  r->text = std::move(text);
  r->format = std::move(format);
  r->passed = passed;
  return r;
}

}  // namespace

extern "C" {

const char* sg_status_name(sg_status s) {
  switch (s) {
    case SG_OK: return "ok";
    case SG_ERR_ARGUMENT: return "invalid argument";
    case SG_ERR_PARSE: return "parse error";
    case SG_ERR_UNKNOWN_KIND: return "unknown kind";
    case SG_ERR_ASSEMBLY: return "assembly error";
    case SG_ERR_NOT_REGULAR: return "not regular";
    case SG_ERR_DISCONNECTED: return "disconnected";
    case SG_ERR_SOLVER: return "solver failure";
    case SG_ERR_CAP: return "cap exceeded";
    case SG_ERR_SEARCH: return "search space exceeded";
    case SG_ERR_HYPOTHESIS: return "hypothesis unmet";
    case SG_ERR_CHECK_FAILED: return "check failed";
    case SG_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* sg_last_error(void) { return g_last_error.c_str(); }

void sg_string_free(char* s) { std::free(s); }
void sg_graph_free(sg_graph* g) { delete g; }
void sg_report_free(sg_report* r) { delete r; }

sg_status sg_graph_create(int n, const int* edges, size_t edge_count, sg_graph** out) {
  return guarded([&] {
    std::vector<Edge> e;
    e.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) e.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new sg_graph{make_graph(n, std::move(e))};
  });
}

sg_status sg_graph_from_graph6(const char* text, sg_graph** out) {
  return guarded([&] { *out = new sg_graph{from_graph6(text ? text : "")}; });
}

sg_status sg_graph_from_json(const char* text, sg_graph** out) {
  return guarded([&] { *out = new sg_graph{graph_from_json(text ? text : "")}; });
}

int sg_graph_order(const sg_graph* g) { return g ? g->g.n : 0; }
int sg_graph_edge_count(const sg_graph* g) { return g ? int(g->g.edges.size()) : 0; }
int sg_graph_is_connected(const sg_graph* g) { return g && is_connected(g->g) ? 1 : 0; }
int sg_graph_is_regular(const sg_graph* g, int k) { return g && is_k_regular(g->g, k) ? 1 : 0; }

sg_status sg_graph_to_graph6(const sg_graph* g, char** out) {
  return guarded([&] { *out = dup_string(to_graph6(g->g)); });
}

sg_status sg_graph_to_json(const sg_graph* g, char** out) {
  return guarded([&] { *out = dup_string(graph_to_json(g->g)); });
}

sg_status sg_graph_canonical_form(const sg_graph* g, char** out) {
  return guarded([&] { *out = dup_string(canonical_cert(g->g).hex()); });
}

sg_status sg_family_gn(int n, sg_graph** out) {
  return guarded([&] { *out = new sg_graph{build_G_n(n).graph}; });
}

sg_status sg_family_h(int m, int i, int j, sg_graph** out) {
  return guarded([&] { *out = new sg_graph{build_H(m, i, j).graph}; });
}

sg_status sg_block_graph(const char* kind, sg_graph** out) {
  return guarded([&] {
    std::string name = kind ? kind : "";
    if (is_brick_name(name))
      *out = new sg_graph{brick_by_name(name).graph};
    else
      *out = new sg_graph{block_by_name(name).graph};
  });
}

sg_status sg_gadget_graph(const char* name, sg_graph** out) {
  return guarded([&] { *out = new sg_graph{gadget(name ? name : "").graph}; });
}

sg_status sg_long_block_graph(const char* const* bricks, size_t count, const char* type,
                              sg_graph** out) {
  return guarded([&] {
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) names.emplace_back(bricks[i]);
    std::string t = type ? type : "";
    LongBlockType lbt;
    if (t == "end") lbt = LongBlockType::End;
    else if (t == "middle") lbt = LongBlockType::Middle;
    else if (t == "complete") lbt = LongBlockType::Complete;
    else fail(Err::InvalidArgument, "type must be end, middle or complete");
    auto res = build_long_block(names, lbt);
    *out = new sg_graph{res.graph ? *res.graph : res.block->graph};
  });
}

sg_status sg_mu(const sg_graph* g, double* out) {
  return guarded([&] { *out = mu_of(g->g); });
}

sg_status sg_relaxation_time(const sg_graph* g, double* out) {
  return guarded([&] { *out = relaxation_time(g->g); });
}

sg_status sg_spectral_report(const sg_graph* g, sg_report** out) {
  return guarded([&] {
    auto rep = algebraic_connectivity(g->g);
    *out = make_report(spectral_report_json(g->g, rep), "json", true);
  });
}

sg_status sg_report_mu_gn(int n, sg_report** out) {
  return guarded([&] {
    Assembly a = build_G_n(n);
    auto rep = algebraic_connectivity(a);
    *out = make_report(spectral_report_json(a.graph, rep), "json", true);
  });
}

sg_status sg_report_mu_range_csv(int n_from, int n_to, sg_report** out) {
  return guarded([&] {
    if (n_from < 11 || n_to < n_from) fail(Err::InvalidArgument, "need 11 <= n_from <= n_to");
    *out = make_report(mu_range_csv(n_from, n_to), "csv", true);
  });
}

sg_status sg_report_structure_gn(int n, double spread_tol, double margin, sg_report** out) {
  return guarded([&] {
    if (spread_tol <= 0.0) spread_tol = 1e-7;
    if (margin <= 0.0) margin = 1e-9;
    auto r = fiedler_structure(build_G_n(n), spread_tol, margin);
    bool ok = r.indeterminate || (r.cell_constant && r.decreasing && r.sign_changes == 1);
    *out = make_report(structure_report_json("Gn", n, r), "json", ok);
  });
}

sg_status sg_report_structure_h(int m, int i, int j, double spread_tol, double margin,
                                sg_report** out) {
  return guarded([&] {
    if (spread_tol <= 0.0) spread_tol = 1e-7;
    if (margin <= 0.0) margin = 1e-9;
    Assembly a = build_H(m, i, j);
    auto r = fiedler_structure(a, spread_tol, margin);
    bool ok = r.indeterminate || (r.cell_constant && r.sign_changes == 1);
    *out = make_report(structure_report_json("H" + std::to_string(i) + std::to_string(j),
                                             a.graph.n, r),
                       "json", ok);
  });
}

sg_status sg_verify_table2(sg_report** out) {
  return guarded([&] {
    auto r = verify_table2();
    *out = make_report(table2_csv(r), "csv", r.all_ok);
  });
}

sg_status sg_verify_h00(int m_max, sg_report** out) {
  return guarded([&] {
    auto r = verify_h00(m_max > 0 ? m_max : 50);
    *out = make_report(h00_csv(r), "csv", r.all_ok);
  });
}

sg_status sg_verify_sandwich(int m_max, sg_report** out) {
  return guarded([&] {
    auto r = verify_sandwich(m_max > 0 ? m_max : 12);
    *out = make_report(sandwich_csv(r), "csv", r.all_ok);
  });
}

sg_status sg_verify_fits(sg_report** out) {
  return guarded([&] {
    auto r = verify_fits();
    *out = make_report(fits_json(r), "json", r.all_ok);
  });
}

sg_status sg_verify_lemma(const char* name, sg_report** out) {
  return guarded([&] {
    auto r = verify_lemmas(name ? name : "all");
    *out = make_report(lemma_rows_json(r.rows), "json", r.all_ok);
  });
}

sg_status sg_verify_roots(sg_report** out) {
  return guarded([&] {
    auto r = verify_root_claims();
    *out = make_report(roots_csv(r), "csv", r.all_ok);
  });
}

sg_status sg_verify_asymptotic(const int* ns, size_t count, sg_report** out) {
  return guarded([&] {
    std::vector<int> list(ns, ns + count);
    auto r = verify_asymptotic(list);
    *out = make_report(asymptotic_csv(r), "csv", r.all_ok);
  });
}

sg_status sg_certify(int n, double cap_seconds, int allow_slow, sg_report** out) {
  return guarded([&] {
    CensusOptions opts;
    opts.threads = g_threads;
    opts.cap_seconds = cap_seconds;
    opts.allow_slow = allow_slow != 0;
    auto r = certify_minimal(n, opts);
    bool ok = r.unique && (n < 11 || r.matches_family);
    *out = make_report(certify_json(r), "json", ok);
  });
}

const char* sg_report_text(const sg_report* r) { return r ? r->text.c_str() : ""; }
int sg_report_passed(const sg_report* r) { return r && r->passed ? 1 : 0; }
const char* sg_report_format(const sg_report* r) { return r ? r->format.c_str() : ""; }

void sg_set_threads(int n) { g_threads = n > 0 ? n : 0; }

}  // extern "C"
