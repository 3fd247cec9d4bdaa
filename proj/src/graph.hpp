#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace specgap {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
// sorted and deduplicated, so two equal graphs compare equal as values.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, std::vector<Edge> edges);

std::vector<int> degrees(const Graph& g);
bool is_k_regular(const Graph& g, int k);
bool is_connected(const Graph& g);
bool has_edge(const Graph& g, int u, int v);

std::vector<std::vector<int>> adjacency_list(const Graph& g);

// Complement within the same vertex set.
Graph complement(const Graph& g);

// perm[old_id] = new_id; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Disjoint union: h's vertices are shifted by g.n.
Graph disjoint_union(const Graph& g, const Graph& h);

// Dense symmetric matrix, packed lower triangle, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order) : order_(order), a_(size_t(order) * (order + 1) / 2, 0.0) {}

  int order() const { return order_; }

  double& at(int i, int j) {
    if (i < j) std::swap(i, j);
    return a_[size_t(i) * (i + 1) / 2 + j];
  }
  double at(int i, int j) const {
    if (i < j) std::swap(i, j);
    return a_[size_t(i) * (i + 1) / 2 + j];
  }

 private:
  int order_ = 0;
  std::vector<double> a_;
};

// L = Delta - A. Entries are exact small integers.
SymMatrix laplacian(const Graph& g);

// Adjacency matrix as SymMatrix.
SymMatrix adjacency_matrix(const Graph& g);

// JSON round trip for the external {"n": int, "edges": [[u,v],...]} schema.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

}  // namespace specgap
