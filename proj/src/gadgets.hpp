#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace specgap {

// A lemma-specific subgraph: exact adjacency from the catalog, an ordered
// frontier of (vertex, slot count) pairs describing edges into a host graph,
// and the ordered value cells its replacement formulas refer to.
struct Gadget {
  std::string name;
  Graph graph;
  std::vector<std::pair<int, int>> frontier;
  std::vector<std::vector<int>> cells;

  int slot_total() const {
    int s = 0;
    for (auto [v, c] : frontier) s += c;
    return s;
  }
};

// Known names: HE1/HE1', HE2/HE2', HE3/HE3' (long-end-block gadgets and
// their short replacements), H1..H4 with primes (forbidden middle fragments
// and their reversals), H5/H5' and H6/H6' (end-plus-M3 composites and their
// replacements), and the composites D0M3..D4M3, M0M3.
Gadget gadget(const std::string& name);

std::vector<std::string> gadget_names();

}  // namespace specgap
