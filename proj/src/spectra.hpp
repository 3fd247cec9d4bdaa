#pragma once

#include <span>
#include <vector>

#include "assembly.hpp"
#include "eigen.hpp"
#include "graph.hpp"

namespace specgap {

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  double mu = 0.0;                  // second smallest
  std::vector<double> fiedler;      // unit, sign-normalized
  double gap23 = 0.0;               // lambda3 - lambda2
  double residual = 0.0;            // max |(L x)_i - mu x_i|
};

// Fiedler sign convention: the sum over the leftmost structural cell is
// positive when cells are given; otherwise the largest-magnitude component
// is positive. Requires n >= 2.
SpectralReport algebraic_connectivity(const Graph& g);
SpectralReport algebraic_connectivity(const Assembly& a);

double mu_of(const Graph& g);

// Quadratic form over the squared norm: sum over edges (x_u - x_v)^2 / |x|^2.
double rayleigh(const Graph& g, std::span<const double> x);

// Energy of x restricted to a set of edges (no normalization).
double edge_energy(const std::vector<Edge>& edges, std::span<const double> x);

struct ShiftedBoundResult {
  double delta;  // x . 1
  double bound;  // x L x^T / (|x|^2 - delta^2/n), an upper bound for mu
};

// Upper bound from a vector that need not be orthogonal to the all-ones
// vector. Raises ConstantVector when x is (numerically) a multiple of 1.
ShiftedBoundResult shifted_bound(const Graph& g, std::span<const double> x);

// k/mu for a connected k-regular graph; cross-checked against 1/(1 - eta2)
// of the transition matrix within 1e-8.
double relaxation_time(const Graph& g);

// The cosine test vector on the m-middle-block family with both end blocks
// D_0: cut vertex i carries cos((2i-1)pi/(2m+2)), end blocks copy their cut
// value, middle-block pairs carry the (3a+2b)/5 and (2a+3b)/5 mixtures.
std::vector<double> test_vector_h00(const Assembly& h00, int m);
std::vector<double> test_vector_h00(int m);  // builds build_H(m, 0, 0)

// Closed-form upper bound for the Rayleigh quotient of that vector:
// 40(m+1)sin^2(pi/(2m+2)) / (77((m+1)/2 - cos^2(pi/(2m+2))) + 24(m cos(pi/(m+1)) - 1)).
double closed_form_f(int m);

// mu of the path P_h: 2(1 - cos(pi/h)).
double path_mu(int h);

}  // namespace specgap
