#pragma once

#include <vector>

#include "graph.hpp"

namespace specgap {

// Ordered list of disjoint nonempty vertex sets covering V.
using Partition = std::vector<std::vector<int>>;

bool is_partition(const Partition& p, int n);
void require_partition(const Partition& p, int n);

// True iff for all cells C_i, C_j the number of neighbors in C_j is the same
// for every vertex of C_i.
bool is_equitable(const Graph& g, const Partition& p);

// Color refinement from the unit partition; the result is the coarsest
// equitable partition of g.
Partition coarsest_equitable(const Graph& g);

// d[i][j] = number of edges between cells i and j (loops within a cell on
// the diagonal).
std::vector<std::vector<int>> cross_edge_counts(const Graph& g, const Partition& p);

}  // namespace specgap
