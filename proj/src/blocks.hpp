#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace specgap {

// Catalog tags. Mirrored entries read right-to-left; bricks drop one or both
// degree-2 attachment vertices of the corresponding short block.
enum class BlockKind {
  M0, M1, M2, M2m, M3,          // middle blocks (M2m = mirror image of M2)
  D0, D1, D2, D3, D4,           // end blocks
};

enum class BrickKind {
  M0p, M1p, M2p,   // M'_k: right degree-2 vertex removed
  D0p, D3p,        // D'_k
  M0pp, M1pp,      // M''_k: both degree-2 vertices removed
};

// A block: fixed adjacency from the catalog plus attachment vertices and the
// ordered structural cells its interior contributes to an assembly.
// Attachment vertices have degree 2 inside the block and are not in cells.
struct Block {
  Graph graph;
  std::optional<int> left_attach;
  std::optional<int> right_attach;
  std::vector<std::vector<int>> cells;  // left-to-right, interior vertices only
  std::string kind;                     // catalog tag, e.g. "M0", "D2~"
  bool mirrored = false;

  int order() const { return graph.n; }
};

// A brick for long blocks: boundary on each side is either a degree-2
// attachment vertex or a pair of degree-3 vertices joined to the next brick
// by two parallel edges.
struct Brick {
  Graph graph;
  std::optional<int> left_attach;
  std::optional<std::pair<int, int>> left_pair;
  std::optional<int> right_attach;
  std::optional<std::pair<int, int>> right_pair;
  std::vector<std::vector<int>> cells;
  std::string kind;
  bool mirrored = false;
};

Block block(BlockKind kind);
Block mirror(const Block& b);

Brick brick(BrickKind kind);
Brick mirror(const Brick& b);

// Parse catalog tags: "M0", "M1", "M2", "M2~", "M3", "D0".."D4" and the
// bricks "M0'", "M1'", "M2'", "D0'", "D3'", "M0''", "M1''"; a trailing "~"
// requests the mirror image.
Block block_by_name(const std::string& name);
Brick brick_by_name(const std::string& name);
bool is_brick_name(const std::string& name);

// Self-mirror involution of a block's vertex set (exchanging the attachment
// roles), if the block is its own mirror image; used by mirror maps.
std::optional<std::vector<int>> self_mirror_involution(const Block& b);

}  // namespace specgap
