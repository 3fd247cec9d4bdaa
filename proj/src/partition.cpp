#include "partition.hpp"

#include <algorithm>
#include <map>

namespace specgap {

bool is_partition(const Partition& p, int n) {
  std::vector<char> seen(n, 0);
  int count = 0;
  for (const auto& cell : p) {
    if (cell.empty()) return false;
    for (int v : cell) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++count;
    }
  }
  return count == n;
}

void require_partition(const Partition& p, int n) {
  if (!is_partition(p, n)) fail(Err::NotAPartition, "cells must be disjoint, nonempty and cover V");
}

bool is_equitable(const Graph& g, const Partition& p) {
  require_partition(p, g.n);
  std::vector<int> cell_of(g.n);
  for (int c = 0; c < int(p.size()); ++c)
    for (int v : p[c]) cell_of[v] = c;
  auto adj = adjacency_list(g);
  for (const auto& cell : p) {
    std::vector<int> ref;
    bool first = true;
    for (int v : cell) {
      std::vector<int> sig(p.size(), 0);
      for (int w : adj[v]) ++sig[cell_of[w]];
      if (first) {
        ref = std::move(sig);
        first = false;
      } else if (sig != ref) {
        return false;
      }
    }
  }
  return true;
}

Partition coarsest_equitable(const Graph& g) {
  Partition cells;
  if (g.n == 0) return cells;
  cells.emplace_back();
  for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
  auto adj = adjacency_list(g);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(g.n);
    for (int c = 0; c < int(cells.size()); ++c)
      for (int v : cells[c]) cell_of[v] = c;
    Partition next;
    for (const auto& cell : cells) {
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (int w : adj[v]) ++sig[cell_of[w]];
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, members] : split) next.push_back(std::move(members));
    }
    cells = std::move(next);
  }
  return cells;
}

std::vector<std::vector<int>> cross_edge_counts(const Graph& g, const Partition& p) {
  require_partition(p, g.n);
  std::vector<int> cell_of(g.n);
  for (int c = 0; c < int(p.size()); ++c)
    for (int v : p[c]) cell_of[v] = c;
  std::vector<std::vector<int>> d(p.size(), std::vector<int>(p.size(), 0));
  for (auto [u, v] : g.edges) {
    int a = cell_of[u], b = cell_of[v];
    ++d[a][b];
    if (a != b) ++d[b][a];
  }
  return d;
}

}  // namespace specgap
