#include "gadgets.hpp"

#include "blocks.hpp"

namespace specgap {

namespace {

Gadget make(std::string name, int n, std::vector<Edge> edges,
            std::vector<std::pair<int, int>> frontier, std::vector<std::vector<int>> cells) {
  Gadget g;
  g.name = std::move(name);
  g.graph = make_graph(n, std::move(edges));
  g.frontier = std::move(frontier);
  g.cells = std::move(cells);
  return g;
}

// Identify the degree-2 vertex of an end block with the left attachment of a
// middle block; the middle block's right attachment keeps two open slots.
Gadget end_plus_middle(std::string name, const Block& end, const Block& mid) {
  int cut = *end.right_attach;
  int base = end.graph.n;
  auto map_mid = [&](int v) {
    if (v == *mid.left_attach) return cut;
    return v < *mid.left_attach ? base + v : base + v - 1;
  };
  std::vector<Edge> edges = end.graph.edges;
  for (auto [u, v] : mid.graph.edges) edges.emplace_back(map_mid(u), map_mid(v));
  std::vector<std::vector<int>> cells;
  for (const auto& c : end.cells) cells.push_back(c);
  cells.push_back({cut});
  for (const auto& c : mid.cells) {
    std::vector<int> cc;
    for (int v : c) cc.push_back(map_mid(v));
    cells.push_back(std::move(cc));
  }
  int out = map_mid(*mid.right_attach);
  cells.push_back({out});
  return make(std::move(name), end.graph.n + mid.graph.n - 1, std::move(edges), {{out, 2}},
              std::move(cells));
}

}  // namespace

Gadget gadget(const std::string& name) {
  // long-end-block gadgets -----------------------------------------------
  if (name == "HE1")
    // K5 minus an edge joined by two parallel edges to a K4 that continues
    return make("HE1", 9,
                {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                 {3, 5}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}},
                {{7, 1}, {8, 1}}, {{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}});
  if (name == "HE1'") {
    Block d3 = block(BlockKind::D3);
    return make("HE1'", 9, d3.graph.edges, {{8, 2}}, {{0, 1, 2, 3}, {4, 5}, {6, 7}, {8}});
  }
  if (name == "HE2")
    // K5 minus an edge joined to the first two pairs of M''_1 (or mirrored M'_2)
    return make("HE2", 9,
                {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                 {3, 5}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}},
                {{7, 2}, {8, 2}}, {{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}});
  if (name == "HE2'") {
    Block d1 = block(BlockKind::D1);
    std::vector<Edge> edges = d1.graph.edges;
    edges.insert(edges.end(), {{6, 7}, {6, 8}, {7, 8}});
    return make("HE2'", 9, std::move(edges), {{7, 2}, {8, 2}},
                {{0, 1, 2, 3}, {4, 5}, {6}, {7, 8}});
  }
  if (name == "HE3") {
    Brick d3p = brick(BrickKind::D3p);
    return make("HE3", 8, d3p.graph.edges, {{6, 1}, {7, 1}}, {{0, 1, 2, 3}, {4, 5}, {6, 7}});
  }
  if (name == "HE3'") {
    Block d2 = block(BlockKind::D2);
    return make("HE3'", 8, d2.graph.edges, {{7, 2}}, {{0, 1, 2, 3}, {4, 5, 6}, {7}});
  }

  // forbidden middle fragments and their reversals ------------------------
  if (name == "H1")
    return make("H1", 7,
                {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}},
                {{0, 2}, {1, 2}, {5, 2}, {6, 2}}, {{0, 1}, {2}, {3, 4}, {5, 6}});
  if (name == "H1'")
    return make("H1'", 7,
                {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5}, {4, 6}, {5, 6}},
                {{0, 2}, {1, 2}, {5, 2}, {6, 2}}, {{0, 1}, {2, 3}, {4}, {5, 6}});
  if (name == "H2")
    return make("H2", 8,
                {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 7},
                 {5, 6}, {5, 7}},
                {{0, 2}, {1, 2}, {6, 2}, {7, 2}}, {{0, 1}, {2}, {3, 4}, {5}, {6, 7}});
  if (name == "H2'")
    return make("H2'", 8,
                {{0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}, {5, 6},
                 {5, 7}, {6, 7}},
                {{0, 2}, {1, 2}, {6, 2}, {7, 2}}, {{0, 1}, {2}, {3, 4}, {5}, {6, 7}});
  if (name == "H3")
    return make("H3", 9,
                {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6},
                 {5, 6}, {5, 7}, {6, 8}, {7, 8}},
                {{0, 2}, {1, 2}, {7, 2}, {8, 2}}, {{0, 1}, {2}, {3, 4}, {5, 6}, {7, 8}});
  if (name == "H3'")
    return make("H3'", 9,
                {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}, {4, 6},
                 {5, 6}, {6, 7}, {6, 8}, {7, 8}},
                {{0, 2}, {1, 2}, {7, 2}, {8, 2}}, {{0, 1}, {2, 3}, {4, 5}, {6}, {7, 8}});
  if (name == "H4")
    return make("H4", 8,
                {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 7},
                 {5, 6}, {5, 7}, {6, 7}},
                {{0, 2}, {1, 2}, {6, 1}, {7, 1}}, {{0, 1}, {2}, {3, 4}, {5}, {6, 7}});
  if (name == "H4'")
    return make("H4'", 8,
                {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {4, 7},
                 {5, 6}, {5, 7}, {6, 7}},
                {{0, 2}, {1, 1}, {2, 1}, {6, 1}, {7, 1}}, {{0}, {1, 2}, {3}, {4, 5}, {6, 7}});

  // end block + M_3 composites and their replacements ---------------------
  if (name == "H5" || name == "D0M3")
    return end_plus_middle(name, block(BlockKind::D0), block(BlockKind::M3));
  if (name == "H5'")
    return end_plus_middle("H5'", block(BlockKind::D1), block(BlockKind::M0));
  if (name == "H6" || name == "D2M3")
    return end_plus_middle(name, block(BlockKind::D2), block(BlockKind::M3));
  if (name == "H6'")
    return end_plus_middle("H6'", block(BlockKind::D3), block(BlockKind::M0));
  if (name == "D1M3") return end_plus_middle(name, block(BlockKind::D1), block(BlockKind::M3));
  if (name == "D3M3") return end_plus_middle(name, block(BlockKind::D3), block(BlockKind::M3));
  if (name == "D4M3") return end_plus_middle(name, block(BlockKind::D4), block(BlockKind::M3));
  if (name == "M0M3") {
    // two open slots on the left as well: M_0 glued to M_3
    Block m0 = block(BlockKind::M0), m3 = block(BlockKind::M3);
    Gadget g = end_plus_middle("M0M3", m0, m3);
    g.frontier.insert(g.frontier.begin(), {*m0.left_attach, 2});
    g.cells.insert(g.cells.begin(), {*m0.left_attach});
    return g;
  }

  fail(Err::UnknownKind, "no gadget named '" + name + "'");
}

std::vector<std::string> gadget_names() {
  return {"HE1", "HE1'", "HE2", "HE2'", "HE3", "HE3'", "H1", "H1'", "H2",  "H2'",
          "H3",  "H3'",  "H4",  "H4'",  "H5",  "H5'",  "H6", "H6'", "D0M3", "D1M3",
          "D2M3", "D3M3", "D4M3", "M0M3"};
}

}  // namespace specgap
