// Command-line front end for the specgap shared library. All computation
// lives behind the C API; this file only parses arguments and moves bytes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specgap/specgap.h"

namespace {

struct ReportDeleter {
  void operator()(sg_report* r) const { sg_report_free(r); }
};
struct GraphDeleter {
  void operator()(sg_graph* g) const { sg_graph_free(g); }
};
using ReportPtr = std::unique_ptr<sg_report, ReportDeleter>;
using GraphPtr = std::unique_ptr<sg_graph, GraphDeleter>;

int g_exit = 0;
std::string g_output_path;

void emit(const std::string& text) {
  if (g_output_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(g_output_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open " << g_output_path << "\n";
    g_exit = 2;
    return;
  }
  out << text;
}

template <typename Call>
void finish_call(Call&& call) {
  sg_report* raw = nullptr;
  sg_status st = call(&raw);
  ReportPtr report(raw);
  if (st != SG_OK) {
    std::cerr << sg_status_name(st) << ": " << sg_last_error() << "\n";
    g_exit = 1;
    return;
  }
  emit(sg_report_text(report.get()));
  if (!sg_report_passed(report.get())) g_exit = 1;
}

GraphPtr load_graph(const std::string& gn, const std::vector<int>& h, const std::string& block,
                    const std::string& gadget, const std::string& graph6,
                    const std::string& json_path) {
  sg_graph* g = nullptr;
  sg_status st = SG_ERR_ARGUMENT;
  if (!gn.empty()) {
    st = sg_family_gn(std::stoi(gn), &g);
  } else if (!h.empty()) {
    st = sg_family_h(h[0], h[1], h[2], &g);
  } else if (!block.empty()) {
    st = sg_block_graph(block.c_str(), &g);
  } else if (!gadget.empty()) {
    st = sg_gadget_graph(gadget.c_str(), &g);
  } else if (!graph6.empty()) {
    st = sg_graph_from_graph6(graph6.c_str(), &g);
  } else if (!json_path.empty()) {
    std::ifstream in(json_path, std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    st = sg_graph_from_json(text.c_str(), &g);
  } else {
    // read graph6 from stdin
    std::string line;
    if (std::getline(std::cin, line)) st = sg_graph_from_graph6(line.c_str(), &g);
  }
  if (st != SG_OK) {
    std::cerr << sg_status_name(st) << ": " << sg_last_error() << "\n";
    g_exit = 1;
    return nullptr;
  }
  return GraphPtr(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for minimum-spectral-gap quartic graph families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", g_output_path, "write the report to a file instead of stdout");
  int threads = 0;
  app.add_option("--threads", threads, "parallelism degree (SPECGAP_THREADS overrides)");

  // family ---------------------------------------------------------------
  auto* family = app.add_subcommand("family", "emit a catalog graph or assembled family member");
  std::string fam_gn, fam_block, fam_gadget, fam_format = "graph6", fam_type = "end";
  std::vector<int> fam_h;
  std::vector<std::string> fam_bricks;
  family->add_option("--gn", fam_gn, "family member of the given order (n >= 11)");
  family->add_option("--hij", fam_h, "m i j: m middles with end blocks D_i, D_j")->expected(3);
  family->add_option("--block", fam_block, "catalog block or brick, e.g. D2, M0, D0', M2~");
  family->add_option("--gadget", fam_gadget, "named verification gadget, e.g. H1, D0M3");
  family->add_option("--long-block", fam_bricks, "bricks of a long block, left to right");
  family->add_option("--type", fam_type, "long block type: end | middle | complete");
  family->add_option("--format", fam_format, "graph6 | json")
      ->check(CLI::IsMember({"graph6", "json"}));

  // mu ---------------------------------------------------------------------
  auto* mu = app.add_subcommand("mu", "spectral report for one graph, or a CSV batch over n");
  std::string mu_gn, mu_block, mu_gadget, mu_graph6, mu_json;
  std::vector<int> mu_h, mu_range;
  mu->add_option("--gn", mu_gn, "family member order");
  mu->add_option("--hij", mu_h, "m i j family spec")->expected(3);
  mu->add_option("--block", mu_block, "catalog block");
  mu->add_option("--gadget", mu_gadget, "named gadget");
  mu->add_option("--graph6", mu_graph6, "graph6 text (default: read stdin)");
  mu->add_option("--json", mu_json, "path of a JSON graph file");
  mu->add_option("--range", mu_range, "n_from n_to: CSV of mu over the family")->expected(2);

  // structure ---------------------------------------------------------------
  auto* structure = app.add_subcommand("structure", "Fiedler structure report for a family member");
  std::string st_gn;
  std::vector<int> st_h;
  double st_spread = 0.0, st_margin = 0.0;
  structure->add_option("--gn", st_gn, "family member order");
  structure->add_option("--hij", st_h, "m i j family spec")->expected(3);
  structure->add_option("--spread-tol", st_spread, "cell spread tolerance (default 1e-7)");
  structure->add_option("--margin", st_margin, "strict-decrease margin (default 1e-9)");

  // verify -------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run one of the verification batteries");
  verify->require_subcommand(1);
  auto* v_table2 = verify->add_subcommand("table2", "mu over n = 11..40 against the published bounds");
  auto* v_h00 = verify->add_subcommand("h00", "cosine test vector against the closed form");
  int h00_m = 50;
  v_h00->add_option("--m-max", h00_m, "largest middle-block count");
  auto* v_sandwich = verify->add_subcommand("sandwich", "two-sided bounds over all end-block pairs");
  int sw_m = 12;
  v_sandwich->add_option("--m-max", sw_m, "largest middle-block count");
  auto* v_fits = verify->add_subcommand("fits", "recover and check every published fit pair");
  auto* v_lemma = verify->add_subcommand("lemma", "replacement-lemma experiments");
  std::string lemma_name = "all";
  v_lemma->add_option("name", lemma_name, "lemma name or 'all'");
  auto* v_roots = verify->add_subcommand("roots", "exact isolation of the quoted polynomial roots");

  // certify -------------------------------------------------------------------
  auto* certify = app.add_subcommand("certify", "exhaustive census and minimality certification");
  int cert_n = 11;
  double cap_seconds = 0.0;
  bool allow_slow = false;
  certify->add_option("--n", cert_n, "order to enumerate (5..14)")->required();
  certify->add_option("--cap-seconds", cap_seconds, "abort the census after this many seconds");
  certify->add_flag("--allow-slow", allow_slow, "permit the long-running n = 14 census");

  // asymptotic -----------------------------------------------------------------
  auto* asym = app.add_subcommand("asymptotic", "n^2 mu / (4 pi^2) along a list of orders");
  std::vector<int> asym_ns{100, 200, 500};
  asym->add_option("--n", asym_ns, "orders to evaluate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (threads > 0) sg_set_threads(threads);

  if (family->parsed()) {
    GraphPtr g;
    if (!fam_bricks.empty()) {
      std::vector<const char*> names;
      for (const auto& b : fam_bricks) names.push_back(b.c_str());
      sg_graph* raw = nullptr;
      sg_status st = sg_long_block_graph(names.data(), names.size(), fam_type.c_str(), &raw);
      if (st != SG_OK) {
        std::cerr << sg_status_name(st) << ": " << sg_last_error() << "\n";
        return 1;
      }
      g.reset(raw);
    } else {
      g = load_graph(fam_gn, fam_h, fam_block, fam_gadget, "", "");
      if (!g) return 1;
    }
    char* text = nullptr;
    sg_status st = fam_format == "json" ? sg_graph_to_json(g.get(), &text)
                                        : sg_graph_to_graph6(g.get(), &text);
    if (st != SG_OK) {
      std::cerr << sg_status_name(st) << ": " << sg_last_error() << "\n";
      return 1;
    }
    emit(std::string(text) + (fam_format == "json" ? "" : "\n"));
    sg_string_free(text);
    return g_exit;
  }

  if (mu->parsed()) {
    if (!mu_range.empty()) {
      finish_call([&](sg_report** r) { return sg_report_mu_range_csv(mu_range[0], mu_range[1], r); });
      return g_exit;
    }
    GraphPtr g = load_graph(mu_gn, mu_h, mu_block, mu_gadget, mu_graph6, mu_json);
    if (!g) return 1;
    finish_call([&](sg_report** r) { return sg_spectral_report(g.get(), r); });
    return g_exit;
  }

  if (structure->parsed()) {
    if (!st_gn.empty())
      finish_call([&](sg_report** r) { return sg_report_structure_gn(std::stoi(st_gn), st_spread, st_margin, r); });
    else if (!st_h.empty())
      finish_call([&](sg_report** r) { return sg_report_structure_h(st_h[0], st_h[1], st_h[2], st_spread, st_margin, r); });
    else {
      std::cerr << "structure needs --gn or --h\n";
      return 2;
    }
    return g_exit;
  }

  if (verify->parsed()) {
    if (v_table2->parsed()) finish_call([&](sg_report** r) { return sg_verify_table2(r); });
    else if (v_h00->parsed()) finish_call([&](sg_report** r) { return sg_verify_h00(h00_m, r); });
    else if (v_sandwich->parsed()) finish_call([&](sg_report** r) { return sg_verify_sandwich(sw_m, r); });
    else if (v_fits->parsed()) finish_call([&](sg_report** r) { return sg_verify_fits(r); });
    else if (v_lemma->parsed()) finish_call([&](sg_report** r) { return sg_verify_lemma(lemma_name.c_str(), r); });
    else if (v_roots->parsed()) finish_call([&](sg_report** r) { return sg_verify_roots(r); });
    return g_exit;
  }

  if (certify->parsed()) {
    finish_call([&](sg_report** r) { return sg_certify(cert_n, cap_seconds, allow_slow ? 1 : 0, r); });
    return g_exit;
  }

  if (asym->parsed()) {
    finish_call([&](sg_report** r) { return sg_verify_asymptotic(asym_ns.data(), asym_ns.size(), r); });
    return g_exit;
  }

  return 2;
}
