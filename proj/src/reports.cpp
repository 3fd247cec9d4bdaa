#include "reports.hpp"

#include <cmath>
#include <cstdio>

#include "graph6.hpp"

namespace specgap {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string json_array(const std::vector<double>& values) {
  std::string out = "[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += format_double(values[i]);
  }
  return out + "]";
}

}  // namespace

std::string spectral_report_json(const Graph& g, const SpectralReport& r) {
  std::string out = "{";
  out += "\"n\":" + std::to_string(g.n);
  out += ",\"edges\":" + std::to_string(g.edges.size());
  out += ",\"mu\":" + format_double(r.mu);
  out += ",\"gap23\":" + format_double(r.gap23);
  out += ",\"residual\":" + format_double(r.residual);
  out += ",\"eigenvalues\":" + json_array(r.eigenvalues);
  out += ",\"fiedler\":" + json_array(r.fiedler);
  return out + "}\n";
}

std::string structure_report_json(const std::string& family, int n,
                                  const FiedlerStructureReport& r) {
  std::string out = "{";
  out += "\"family\":\"" + family + "\"";
  out += ",\"n\":" + std::to_string(n);
  out += ",\"cell_constant\":" + json_bool(r.cell_constant);
  out += ",\"max_spread\":" + format_double(r.max_spread);
  out += ",\"decreasing\":" + json_bool(r.decreasing);
  out += ",\"sign_changes\":" + std::to_string(r.sign_changes);
  out += ",\"indeterminate\":" + json_bool(r.indeterminate);
  if (r.skew_symmetric) {
    out += ",\"skew_symmetric\":" + json_bool(*r.skew_symmetric);
    out += ",\"skew_defect\":" + format_double(r.skew_defect);
  }
  if (!r.exceptional_cells.empty()) {
    out += ",\"known_exceptional_cells\":[";
    for (size_t i = 0; i < r.exceptional_cells.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(r.exceptional_cells[i]);
    }
    out += "]";
  }
  out += ",\"cell_means\":" + json_array(r.cell_means);
  return out + "}\n";
}

std::string mu_range_csv(int n_from, int n_to) {
  std::string out = "# specgap-mu-v1\nn,mu,gap23,residual\n";
  for (int n = n_from; n <= n_to; ++n) {
    auto rep = algebraic_connectivity(build_G_n(n));
    out += std::to_string(n) + "," + format_double(rep.mu) + "," + format_double(rep.gap23) + "," +
           format_double(rep.residual) + "\n";
  }
  return out;
}

std::string table2_csv(const Table2Report& r) {
  std::string out = "# specgap-table2-v1\nn,mu,ceil3,expected_ceil3,decreasing,status\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n) + "," + format_double(row.mu) + "," + format_double(row.ceil3) +
           ",";
    if (row.expected_ceil3 != 0.0) out += format_double(row.expected_ceil3);
    out += std::string(",") + (row.decreasing ? "yes" : "no") + "," +
           (row.pass ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

std::string h00_csv(const H00Report& r) {
  std::string out = "# specgap-h00-v1\nm,rayleigh,f,perp_defect,status\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.m) + "," + format_double(row.rayleigh_value) + "," +
           format_double(row.f_value) + "," + format_double(row.perp_defect) + "," +
           (row.pass ? "PASS" : "FAIL") + "\n";
  out += std::string("# f(6) < 0.046: ") + (r.f6_ok ? "PASS" : "FAIL") + "\n";
  out += std::string("# f decreasing: ") + (r.decreasing_ok ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string sandwich_csv(const SandwichReport& r) {
  std::string out = "# specgap-sandwich-v1\nm,i,j,mu,mu44,mu00,path_lower,f_upper,status\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.m) + "," + std::to_string(row.i) + "," + std::to_string(row.j) +
           "," + format_double(row.mu) + "," + format_double(row.mu44) + "," +
           format_double(row.mu00) + "," + format_double(row.path_lower) + "," +
           format_double(row.f_upper) + "," + (row.pass ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string asymptotic_csv(const AsymptoticReport& r) {
  std::string out = "# specgap-asymptotic-v1\nn,mu,ratio,af_ratio\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.n) + "," + format_double(row.mu) + "," + format_double(row.ratio) +
           "," + format_double(row.af_ratio) + "\n";
  return out;
}

std::string fits_json(const FitsReport& r) {
  std::string out = "[";
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    if (i) out += ",";
    out += "\n {\"base\":\"" + row.base + "\",\"candidate\":\"" + row.candidate +
           "\",\"found\":" + json_bool(row.found) + ",\"witness_ok\":" + json_bool(row.witness_ok) +
           ",\"cells\":" + std::to_string(row.cells) + "}";
  }
  return out + "\n]\n";
}

std::string lemma_rows_json(const std::vector<LemmaRow>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (i) out += ",";
    out += "\n {\"lemma\":\"" + row.lemma + "\",\"instance\":\"" + row.instance + "\",\"type\":\"" +
           row.type + "\",\"n\":" + std::to_string(row.n) +
           ",\"mu_before\":" + format_double(row.mu_before) +
           ",\"mu_after\":" + format_double(row.mu_after) +
           ",\"bound_after\":" + format_double(row.bound_after) +
           ",\"margin\":" + format_double(row.margin);
    if (row.type == "replace")
      out += ",\"h\":" + format_double(row.h) + ",\"h_prime\":" + format_double(row.h_prime) +
             ",\"epsilon\":" + format_double(row.epsilon) + ",\"delta\":" + format_double(row.delta) +
             ",\"criterion\":" + format_double(row.criterion);
    out += ",\"hypothesis_status\":\"" + row.hypothesis_status + "\",\"pass\":" +
           json_bool(row.pass) + "}";
  }
  return out + "\n]\n";
}

std::string roots_csv(const RootClaimReport& r) {
  std::string out = "# specgap-roots-v1\nkind,id,quoted_or_interval,lo,hi,verdict\n";
  for (const auto& c : r.claims)
    out += "claim," + c.id + "," + format_double(c.quoted) + "," + format_double(c.lo) + "," +
           format_double(c.hi) + "," + (c.matched ? "PASS" : "FAIL") + "\n";
  for (const auto& f : r.facts)
    out += "sign," + f.id + "," + f.interval + ",,," + (f.holds ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string certify_json(const MinimalityReport& r) {
  std::string out = "{";
  out += "\"n\":" + std::to_string(r.n);
  out += ",\"census_size\":" + std::to_string(r.census_size);
  out += ",\"mu_min\":" + format_double(r.mu_min);
  out += ",\"unique\":" + json_bool(r.unique);
  out += ",\"matches_family\":" + json_bool(r.matches_family);
  out += ",\"template_ok\":" + json_bool(r.template_ok);
  out += ",\"minimal\":[";
  for (size_t i = 0; i < r.minimal.size(); ++i) {
    if (i) out += ",";
    out += "{\"graph6\":\"" + to_graph6(r.minimal[i].graph) +
           "\",\"mu\":" + format_double(r.minimal[i].mu) + "}";
  }
  return out + "]}\n";
}

}  // namespace specgap
