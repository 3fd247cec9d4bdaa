#include "blocks.hpp"

#include <algorithm>

namespace specgap {

namespace {

Block make_block(std::string kind, int n, std::vector<Edge> edges, std::optional<int> left,
                 std::optional<int> right, std::vector<std::vector<int>> cells) {
  Block b;
  b.graph = make_graph(n, std::move(edges));
  b.left_attach = left;
  b.right_attach = right;
  b.cells = std::move(cells);
  b.kind = std::move(kind);
  auto deg = degrees(b.graph);
  if (left && deg[*left] != 2) fail(Err::InvalidArgument, "left attachment degree != 2 in " + b.kind);
  if (right && deg[*right] != 2) fail(Err::InvalidArgument, "right attachment degree != 2 in " + b.kind);
  return b;
}

// Erase one vertex, relabeling the tail down by one.
Graph drop_vertex(const Graph& g, int v) {
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges) {
    if (a == v || b == v) continue;
    edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return make_graph(g.n - 1, std::move(edges));
}

int shift(int v, int dropped) { return v > dropped ? v - 1 : v; }

}  // namespace

Block block(BlockKind kind) {
  switch (kind) {
    case BlockKind::M0:
      // 0 -(1,2)- K4{1,2,3,4} -(3,4)- 5
      return make_block("M0", 6,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
                        0, 5, {{1, 2}, {3, 4}});
    case BlockKind::M1:
      return make_block("M1", 8,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                         {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}},
                        0, 7, {{1, 2}, {3, 4}, {5, 6}});
    case BlockKind::M2:
      return make_block("M2", 9,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5},
                         {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}},
                        0, 8, {{1, 2}, {3}, {4, 5}, {6, 7}});
    case BlockKind::M2m:
      return mirror(block(BlockKind::M2));
    case BlockKind::M3:
      return make_block("M3", 7,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {3, 5},
                         {4, 5}, {4, 6}, {5, 6}},
                        0, 6, {{1, 2}, {3}, {4, 5}});
    case BlockKind::D0:
      // triangle {0,1,2} complete to the pair {3,4}; attachment 5 on {3,4}
      return make_block("D0", 6,
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                         {3, 5}, {4, 5}},
                        std::nullopt, 5, {{0, 1, 2}, {3, 4}});
    case BlockKind::D1:
      // K4{0,1,2,3}; pair {4,5} with 4~{0,1}, 5~{2,3}; attachment 6
      return make_block("D1", 7,
                        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 5},
                         {3, 5}, {4, 5}, {4, 6}, {5, 6}},
                        std::nullopt, 6, {{0, 1, 2, 3}, {4, 5}});
    case BlockKind::D2:
      // K4{0,1,2,3}; 4~{0,1}; 5~{2,4}, 6~{3,4}; 5~6; attachment 7
      return make_block("D2", 8,
                        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 5},
                         {3, 6}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}},
                        std::nullopt, 7, {{0, 1}, {2, 3}, {4}, {5, 6}});
    case BlockKind::D3:
      // K4{0,1,2,3}; pair {4,5} with 4~{0,1}, 5~{2,3}; pair {6,7} complete to
      // {4,5} and adjacent; attachment 8
      return make_block("D3", 9,
                        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 5},
                         {3, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 8}},
                        std::nullopt, 8, {{0, 1, 2, 3}, {4, 5}, {6, 7}});
    case BlockKind::D4:
      // K5 minus {3,4}; 3~5, 4~6 into K4{5,6,7,8}; attachment 9 on {7,8}
      return make_block("D4", 10,
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                         {3, 5}, {4, 6}, {5, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {7, 9},
                         {8, 9}},
                        std::nullopt, 9, {{0, 1, 2}, {3, 4}, {5, 6}, {7, 8}});
  }
  fail(Err::UnknownKind, "unknown block kind");
}

Block mirror(const Block& b) {
  Block m = b;
  std::swap(m.left_attach, m.right_attach);
  std::reverse(m.cells.begin(), m.cells.end());
  m.mirrored = !b.mirrored;
  m.kind = b.mirrored ? b.kind.substr(0, b.kind.size() - 1) : b.kind + "~";
  return m;
}

Brick brick(BrickKind kind) {
  auto from_block = [](const Block& b, bool drop_left, bool drop_right) {
    Brick r;
    r.kind = b.kind;
    Graph g = b.graph;
    int right = b.right_attach.value();
    std::optional<int> left = b.left_attach;
    if (drop_right) {
      // neighbors of the removed vertex become the boundary pair
      std::vector<int> nb;
      for (auto [u, v] : g.edges) {
        if (u == right) nb.push_back(v);
        if (v == right) nb.push_back(u);
      }
      std::sort(nb.begin(), nb.end());
      g = drop_vertex(g, right);
      r.right_pair = {shift(nb[0], right), shift(nb[1], right)};
      if (left) left = shift(*left, right);
      for (const auto& cell : b.cells) {
        std::vector<int> c;
        for (int v : cell) c.push_back(shift(v, right));
        r.cells.push_back(std::move(c));
      }
    } else {
      r.right_attach = right;
      r.cells = b.cells;
    }
    if (drop_left) {
      int l = left.value();
      std::vector<int> nb;
      for (auto [u, v] : g.edges) {
        if (u == l) nb.push_back(v);
        if (v == l) nb.push_back(u);
      }
      std::sort(nb.begin(), nb.end());
      g = drop_vertex(g, l);
      r.left_pair = {shift(nb[0], l), shift(nb[1], l)};
      if (r.right_pair) r.right_pair = {shift(r.right_pair->first, l), shift(r.right_pair->second, l)};
      if (r.right_attach) r.right_attach = shift(*r.right_attach, l);
      for (auto& cell : r.cells)
        for (auto& v : cell) v = shift(v, l);
    } else {
      r.left_attach = left;
    }
    r.graph = std::move(g);
    return r;
  };
  switch (kind) {
    case BrickKind::M0p: {
      auto r = from_block(block(BlockKind::M0), false, true);
      r.kind = "M0'";
      return r;
    }
    case BrickKind::M1p: {
      auto r = from_block(block(BlockKind::M1), false, true);
      r.kind = "M1'";
      return r;
    }
    case BrickKind::M2p: {
      auto r = from_block(block(BlockKind::M2), false, true);
      r.kind = "M2'";
      return r;
    }
    case BrickKind::D0p: {
      auto r = from_block(block(BlockKind::D0), false, true);
      r.kind = "D0'";
      return r;
    }
    case BrickKind::D3p: {
      auto r = from_block(block(BlockKind::D3), false, true);
      r.kind = "D3'";
      return r;
    }
    case BrickKind::M0pp: {
      auto r = from_block(block(BlockKind::M0), true, true);
      r.kind = "M0''";
      return r;
    }
    case BrickKind::M1pp: {
      auto r = from_block(block(BlockKind::M1), true, true);
      r.kind = "M1''";
      return r;
    }
  }
  fail(Err::UnknownKind, "unknown brick kind");
}

Brick mirror(const Brick& b) {
  Brick m = b;
  std::swap(m.left_attach, m.right_attach);
  std::swap(m.left_pair, m.right_pair);
  std::reverse(m.cells.begin(), m.cells.end());
  m.mirrored = !b.mirrored;
  m.kind = b.mirrored ? b.kind.substr(0, b.kind.size() - 1) : b.kind + "~";
  return m;
}

namespace {

std::optional<BlockKind> block_kind_of(const std::string& base) {
  if (base == "M0") return BlockKind::M0;
  if (base == "M1") return BlockKind::M1;
  if (base == "M2") return BlockKind::M2;
  if (base == "M3") return BlockKind::M3;
  if (base == "D0") return BlockKind::D0;
  if (base == "D1") return BlockKind::D1;
  if (base == "D2") return BlockKind::D2;
  if (base == "D3") return BlockKind::D3;
  if (base == "D4") return BlockKind::D4;
  return std::nullopt;
}

std::optional<BrickKind> brick_kind_of(const std::string& base) {
  if (base == "M0'") return BrickKind::M0p;
  if (base == "M1'") return BrickKind::M1p;
  if (base == "M2'") return BrickKind::M2p;
  if (base == "D0'") return BrickKind::D0p;
  if (base == "D3'") return BrickKind::D3p;
  if (base == "M0''") return BrickKind::M0pp;
  if (base == "M1''") return BrickKind::M1pp;
  return std::nullopt;
}

}  // namespace

Block block_by_name(const std::string& name) {
  bool mirrored = !name.empty() && name.back() == '~';
  std::string base = mirrored ? name.substr(0, name.size() - 1) : name;
  auto k = block_kind_of(base);
  if (!k) fail(Err::UnknownKind, "no block named '" + name + "'");
  Block b = block(*k);
  return mirrored ? mirror(b) : b;
}

bool is_brick_name(const std::string& name) {
  bool mirrored = !name.empty() && name.back() == '~';
  std::string base = mirrored ? name.substr(0, name.size() - 1) : name;
  return brick_kind_of(base).has_value();
}

Brick brick_by_name(const std::string& name) {
  bool mirrored = !name.empty() && name.back() == '~';
  std::string base = mirrored ? name.substr(0, name.size() - 1) : name;
  auto k = brick_kind_of(base);
  if (!k) fail(Err::UnknownKind, "no brick named '" + name + "'");
  Brick b = brick(*k);
  return mirrored ? mirror(b) : b;
}

std::optional<std::vector<int>> self_mirror_involution(const Block& b) {
  // search for an automorphism that swaps the attachment roles and is an
  // involution; block orders are tiny, so backtracking is fine
  if (!b.left_attach || !b.right_attach) return std::nullopt;
  int n = b.graph.n;
  auto deg = degrees(b.graph);
  auto adj = adjacency_list(b.graph);
  std::vector<int> map_to(n, -1);
  std::vector<char> used(n, 0);
  map_to[*b.left_attach] = *b.right_attach;
  map_to[*b.right_attach] = *b.left_attach;
  used[*b.left_attach] = used[*b.right_attach] = 1;

  std::function<bool(int)> place = [&](int v) -> bool {
    while (v < n && map_to[v] != -1) ++v;
    if (v == n) {
      for (auto [x, y] : b.graph.edges)
        if (!has_edge(b.graph, map_to[x], map_to[y])) return false;
      for (int i = 0; i < n; ++i)
        if (map_to[map_to[i]] != i) return false;
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg[v] != deg[w]) continue;
      if (w == v && map_to[v] == -1) {
        // fixed point allowed
      }
      bool ok = true;
      for (int u : adj[v])
        if (map_to[u] != -1 && !has_edge(b.graph, w, map_to[u])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      int prev_w_map = map_to[w];
      if (w != v && prev_w_map == -1) {
        // force involution as we go
        map_to[v] = w;
        map_to[w] = v;
        used[v] = used[w] = 1;
        if (place(v + 1)) return true;
        map_to[v] = map_to[w] = -1;
        used[v] = used[w] = 0;
      } else if (w == v) {
        map_to[v] = v;
        used[v] = 1;
        if (place(v + 1)) return true;
        map_to[v] = -1;
        used[v] = 0;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return map_to;
}

}  // namespace specgap
