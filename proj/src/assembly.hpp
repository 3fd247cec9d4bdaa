#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "graph.hpp"

namespace specgap {

// An ordered sequence of blocks glued at cut vertices into a path-like
// quartic graph. Keeps enough provenance to recover structural cells and the
// left-right mirror of palindromic assemblies.
struct Assembly {
  std::vector<Block> blocks;  // as placed; the right end is already mirrored
  Graph graph;
  std::vector<std::vector<int>> cell_order;      // global ids, left to right
  std::vector<std::string> cell_label;           // "<kind>.<i>" or "cut<i>"
  std::vector<int> cut_vertices;                 // cut i joins blocks i and i+1
  std::vector<std::vector<int>> local_to_global; // per block

  int order() const { return graph.n; }
};

Assembly assemble(std::vector<Block> blocks);

// The minimum-gap family: m = (n-11)/5 middle blocks M_0 and the end pair
// determined by (n-11) mod 5. Requires n >= 11.
Assembly build_G_n(int n);

// m middle blocks M_0 with end blocks D_i and D_j (right end mirrored).
Assembly build_H(int m, int i, int j);

enum class LongBlockType { End, Middle, Complete };

struct LongBlockResult {
  std::optional<Block> block;  // End / Middle
  std::optional<Graph> graph;  // Complete (a standalone quartic graph)
};

// Joins consecutive bricks by two parallel edges between their boundary
// pairs. Grammar: interior bricks are M0''/M1''; the first and last brick
// depend on the type. Violations raise GrammarViolation.
LongBlockResult build_long_block(const std::vector<Brick>& bricks, LongBlockType type);
LongBlockResult build_long_block(const std::vector<std::string>& brick_names, LongBlockType type);

// Involution exchanging left and right of a palindromic assembly; an
// automorphism of the glued graph. Raises NotPalindromic otherwise.
std::vector<int> mirror_map(const Assembly& a);

bool is_palindromic(const Assembly& a);

}  // namespace specgap
