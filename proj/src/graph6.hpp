#pragma once

#include <string>

#include "graph.hpp"

namespace specgap {

// Standard graph6 encoding: N(n) followed by the upper triangle read
// column-wise in 6-bit chunks, each offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace specgap
