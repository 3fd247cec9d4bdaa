#pragma once

#include <vector>

#include "graph.hpp"

namespace specgap {

struct EigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[k] is the unit eigenvector for values[k]
};

// Deterministic dense symmetric eigensolver: Householder reduction to
// tridiagonal form followed by implicit-shift QL with eigenvector
// accumulation. Iteration cap per eigenvalue raises ConvergenceFailure.
EigenResult eigen_sym(const SymMatrix& m, int max_iter = 64);

}  // namespace specgap
