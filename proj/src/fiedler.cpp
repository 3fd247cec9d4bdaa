#include "fiedler.hpp"

#include <algorithm>
#include <cmath>

#include "spectra.hpp"

namespace specgap {

namespace {

bool is_head_label(const std::string& label) {
  // merged head cells: the first cell of an end block or of a long block
  // starting with D'_0/D'_3 (triangle or K4 heads)
  if (label.size() < 2) return false;
  return label[0] != 'c' && label.substr(label.size() - 2) == ".0" &&
         (label[0] == 'D' || label[0] == '[');
}

}  // namespace

FiedlerStructureReport fiedler_structure(const Graph& g, std::span<const double> x,
                                         const Partition& cells, double spread_tol, double margin,
                                         const std::vector<std::string>* labels,
                                         const std::vector<int>* mirror) {
  if (int(x.size()) != g.n) fail(Err::DimensionMismatch, "vector length != n");
  require_partition(cells, g.n);
  FiedlerStructureReport r;
  r.cell_constant = true;
  for (int c = 0; c < int(cells.size()); ++c) {
    double lo = x[cells[c][0]], hi = lo, sum = 0.0;
    for (int v : cells[c]) {
      lo = std::min(lo, x[v]);
      hi = std::max(hi, x[v]);
      sum += x[v];
    }
    double spread = hi - lo;
    r.max_spread = std::max(r.max_spread, spread);
    if (spread > spread_tol) {
      if (labels && c < int(labels->size()) && is_head_label((*labels)[c]))
        r.exceptional_cells.push_back(c);
      else
        r.cell_constant = false;
    }
    r.cell_means.push_back(sum / double(cells[c].size()));
  }

  r.decreasing = true;
  for (size_t c = 1; c < r.cell_means.size(); ++c)
    if (!(r.cell_means[c] < r.cell_means[c - 1] - margin)) r.decreasing = false;

  int last_sign = 0;
  for (int c = 0; c < int(r.cell_means.size()); ++c) {
    double m = r.cell_means[c];
    if (std::fabs(m) <= margin) {
      r.zero_cells.push_back(c);
      continue;
    }
    int s = m > 0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++r.sign_changes;
    last_sign = s;
  }

  if (mirror) {
    if (int(mirror->size()) != g.n) fail(Err::DimensionMismatch, "mirror map length != n");
    double defect = 0.0;
    for (int v = 0; v < g.n; ++v) defect = std::max(defect, std::fabs(x[v] + x[(*mirror)[v]]));
    r.skew_defect = defect;
    r.skew_symmetric = defect <= std::max(spread_tol, 1e-7);
  }
  return r;
}

FiedlerStructureReport fiedler_structure(const Assembly& a, double spread_tol, double margin,
                                         double gap_guard) {
  auto rep = algebraic_connectivity(a);
  std::vector<int> sigma;
  const std::vector<int>* mirror = nullptr;
  if (is_palindromic(a)) {
    sigma = mirror_map(a);
    mirror = &sigma;
  }
  auto r = fiedler_structure(a.graph, rep.fiedler, a.cell_order, spread_tol, margin, &a.cell_label,
                             mirror);
  if (rep.gap23 < gap_guard) r.indeterminate = true;
  return r;
}

}  // namespace specgap
