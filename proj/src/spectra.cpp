#include "spectra.hpp"

#include <cmath>

namespace specgap {

namespace {

SpectralReport report_from(const Graph& g, const EigenResult& eig) {
  SpectralReport r;
  r.eigenvalues = eig.values;
  r.mu = eig.values[1];
  r.fiedler = eig.vectors[1];
  r.gap23 = g.n >= 3 ? eig.values[2] - eig.values[1] : 0.0;
  double res = 0.0;
  auto adj = adjacency_list(g);
  auto deg = degrees(g);
  for (int i = 0; i < g.n; ++i) {
    double lx = deg[i] * r.fiedler[i];
    for (int w : adj[i]) lx -= r.fiedler[w];
    res = std::max(res, std::fabs(lx - r.mu * r.fiedler[i]));
  }
  r.residual = res;
  return r;
}

void sign_normalize(std::vector<double>& x, const std::vector<int>* leftmost_cell) {
  double s = 0.0;
  if (leftmost_cell) {
    for (int v : *leftmost_cell) s += x[v];
  } else {
    int arg = 0;
    for (int i = 1; i < int(x.size()); ++i)
      if (std::fabs(x[i]) > std::fabs(x[arg])) arg = i;
    s = x[arg];
  }
  if (s < 0.0)
    for (auto& v : x) v = -v;
}

}  // namespace

SpectralReport algebraic_connectivity(const Graph& g) {
  if (g.n < 2) fail(Err::InvalidArgument, "need at least two vertices");
  auto r = report_from(g, eigen_sym(laplacian(g)));
  sign_normalize(r.fiedler, nullptr);
  return r;
}

SpectralReport algebraic_connectivity(const Assembly& a) {
  auto r = report_from(a.graph, eigen_sym(laplacian(a.graph)));
  const std::vector<int>* leftmost = a.cell_order.empty() ? nullptr : &a.cell_order.front();
  sign_normalize(r.fiedler, leftmost);
  return r;
}

double mu_of(const Graph& g) {
  if (g.n < 2) fail(Err::InvalidArgument, "need at least two vertices");
  return eigen_sym(laplacian(g)).values[1];
}

double rayleigh(const Graph& g, std::span<const double> x) {
  if (int(x.size()) != g.n) fail(Err::DimensionMismatch, "vector length != n");
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (norm2 == 0.0) fail(Err::ZeroVector, "Rayleigh quotient of the zero vector");
  return edge_energy(g.edges, x) / norm2;
}

double edge_energy(const std::vector<Edge>& edges, std::span<const double> x) {
  double e = 0.0;
  for (auto [u, v] : edges) {
    double d = x[u] - x[v];
    e += d * d;
  }
  return e;
}

ShiftedBoundResult shifted_bound(const Graph& g, std::span<const double> x) {
  if (int(x.size()) != g.n) fail(Err::DimensionMismatch, "vector length != n");
  double delta = 0.0, norm2 = 0.0;
  for (double v : x) {
    delta += v;
    norm2 += v * v;
  }
  double denom = norm2 - delta * delta / g.n;
  if (denom <= 1e-14 * std::max(1.0, norm2))
    fail(Err::ConstantVector, "vector is a multiple of the all-ones vector");
  return {delta, edge_energy(g.edges, x) / denom};
}

double relaxation_time(const Graph& g) {
  auto deg = degrees(g);
  int k = g.n > 0 ? deg[0] : 0;
  if (!is_k_regular(g, k) || k == 0) fail(Err::NotRegular, "relaxation time needs a regular graph");
  if (!is_connected(g)) fail(Err::Disconnected, "relaxation time needs a connected graph");
  double mu = mu_of(g);
  double tau = double(k) / mu;
  // second route: eta2 of the transition matrix A/k
  SymMatrix t = adjacency_matrix(g);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j <= i; ++j) t.at(i, j) /= double(k);
  auto eig = eigen_sym(t);
  double eta2 = eig.values[g.n - 2];
  double tau2 = 1.0 / (1.0 - eta2);
  if (std::fabs(tau - tau2) > 1e-8 * std::max(1.0, tau))
    fail(Err::ConvergenceFailure, "relaxation-time cross-check disagreed");
  return tau;
}

std::vector<double> test_vector_h00(const Assembly& h00, int m) {
  if (m < 1) fail(Err::InvalidArgument, "test vector needs m >= 1");
  if (int(h00.blocks.size()) != m + 2) fail(Err::DimensionMismatch, "assembly does not have m middles");
  if (h00.blocks.front().kind != "D0" || h00.blocks.back().kind != "D0~")
    fail(Err::InvalidArgument, "the cosine vector lives on the family with both end blocks D0");
  for (int b = 1; b <= m; ++b)
    if (h00.blocks[b].kind != "M0")
      fail(Err::InvalidArgument, "middle blocks must all be M0");
  std::vector<double> cut_val(m + 1);
  for (int i = 1; i <= m + 1; ++i) cut_val[i - 1] = std::cos((2 * i - 1) * M_PI / (2 * m + 2));

  std::vector<double> x(h00.graph.n, 0.0);
  // end blocks copy their cut value
  for (int v : h00.local_to_global.front()) x[v] = cut_val[0];
  for (int v : h00.local_to_global.back()) x[v] = cut_val[m];
  for (int c = 0; c <= m; ++c) x[h00.cut_vertices[c]] = cut_val[c];
  for (int b = 1; b <= m; ++b) {
    double a = cut_val[b - 1], bb = cut_val[b];
    const Block& blk = h00.blocks[b];
    for (int v : blk.cells[0]) x[h00.local_to_global[b][v]] = (3 * a + 2 * bb) / 5.0;
    for (int v : blk.cells[1]) x[h00.local_to_global[b][v]] = (2 * a + 3 * bb) / 5.0;
  }
  return x;
}

std::vector<double> test_vector_h00(int m) { return test_vector_h00(build_H(m, 0, 0), m); }

double closed_form_f(int m) {
  if (m < 1) fail(Err::InvalidArgument, "closed form needs m >= 1");
  double t = M_PI / (2.0 * m + 2.0);
  double s = std::sin(t), c = std::cos(t);
  double num = 40.0 * (m + 1) * s * s;
  double den = 77.0 * ((m + 1) / 2.0 - c * c) + 24.0 * (m * std::cos(M_PI / (m + 1)) - 1.0);
  return num / den;
}

double path_mu(int h) {
  if (h < 2) fail(Err::InvalidArgument, "path needs at least two vertices");
  return 2.0 * (1.0 - std::cos(M_PI / h));
}

}  // namespace specgap
