#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace specgap {

namespace {

inline double hypot2(double a, double b) { return std::sqrt(a * a + b * b); }

// Householder reduction of a (full, row-major) symmetric matrix to
// tridiagonal form; the orthogonal transform is accumulated in place.
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return z[size_t(i) * n + j]; };
  for (int i = n - 1; i > 0; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
  }
}

// Implicit-shift QL on the tridiagonal (d, e), accumulating rotations into z.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n,
                 int max_iter) {
  auto at = [&](int i, int j) -> double& { return z[size_t(i) * n + j]; };
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd)
          break;
      }
      if (m != l) {
        if (iter++ == max_iter) fail(Err::ConvergenceFailure, "QL iteration cap reached");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = at(k, i + 1);
            at(k, i + 1) = s * at(k, i) + c * f;
            at(k, i) = c * at(k, i) - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigenResult eigen_sym(const SymMatrix& m, int max_iter) {
  int n = m.order();
  if (n == 0) return {};
  std::vector<double> z(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z[size_t(i) * n + j] = m.at(i, j);
  std::vector<double> d(n, 0.0), e(n, 0.0);
  if (n == 1) {
    return {{z[0]}, {{1.0}}};
  }
  tridiagonalize(z, n, d, e);
  ql_implicit(d, e, z, n, max_iter);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });

  EigenResult res;
  res.values.reserve(n);
  res.vectors.reserve(n);
  for (int k : order) {
    res.values.push_back(d[k]);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = z[size_t(i) * n + k];
    // deterministic sign: make the largest-magnitude component positive
    int arg = 0;
    for (int i = 1; i < n; ++i)
      if (std::fabs(v[i]) > std::fabs(v[arg])) arg = i;
    if (v[arg] < 0.0)
      for (auto& x : v) x = -x;
    res.vectors.push_back(std::move(v));
  }
  return res;
}

}  // namespace specgap
