#include "assembly.hpp"

#include <algorithm>

namespace specgap {

Assembly assemble(std::vector<Block> blocks) {
  if (blocks.size() < 2) fail(Err::IncompatibleAttachment, "an assembly needs at least two blocks");
  const int k = int(blocks.size());
  for (int i = 0; i < k; ++i) {
    const Block& b = blocks[i];
    bool need_left = i > 0, need_right = i + 1 < k;
    if (b.left_attach.has_value() != need_left || b.right_attach.has_value() != need_right)
      fail(Err::IncompatibleAttachment,
           "block " + std::to_string(i) + " (" + b.kind + ") has the wrong attachment sides");
  }

  Assembly a;
  a.blocks = std::move(blocks);
  a.local_to_global.resize(k);

  int next_id = 0;
  for (int i = 0; i < k; ++i) {
    const Block& b = a.blocks[i];
    auto& map = a.local_to_global[i];
    map.assign(b.graph.n, -1);
    if (i > 0) map[*b.left_attach] = a.cut_vertices.back();
    for (int v = 0; v < b.graph.n; ++v)
      if (map[v] < 0) map[v] = next_id++;
    if (i + 1 < k) a.cut_vertices.push_back(map[*b.right_attach]);
  }

  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (auto [u, v] : a.blocks[i].graph.edges)
      edges.emplace_back(a.local_to_global[i][u], a.local_to_global[i][v]);
  a.graph = make_graph(next_id, std::move(edges));

  if (!is_k_regular(a.graph, 4))
    fail(Err::NotQuarticAfterGlue, "glued graph is not 4-regular");
  if (!is_connected(a.graph)) fail(Err::NotQuarticAfterGlue, "glued graph is disconnected");

  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      a.cell_order.push_back({a.cut_vertices[i - 1]});
      a.cell_label.push_back("cut" + std::to_string(i - 1));
    }
    const Block& b = a.blocks[i];
    for (int c = 0; c < int(b.cells.size()); ++c) {
      std::vector<int> cell;
      for (int v : b.cells[c]) cell.push_back(a.local_to_global[i][v]);
      a.cell_order.push_back(std::move(cell));
      a.cell_label.push_back(b.kind + "." + std::to_string(c));
    }
  }
  return a;
}

Assembly build_G_n(int n) {
  if (n < 11) fail(Err::OrderTooSmall, "the family starts at order 11");
  int m = (n - 11) / 5;
  int r = (n - 11) % 5;
  BlockKind left, right;
  switch (r) {
    case 0: left = BlockKind::D0; right = BlockKind::D0; break;
    case 1: left = BlockKind::D0; right = BlockKind::D1; break;
    case 2: left = BlockKind::D1; right = BlockKind::D1; break;
    case 3: left = BlockKind::D1; right = BlockKind::D2; break;
    default: left = BlockKind::D0; right = BlockKind::D4; break;
  }
  std::vector<Block> seq;
  seq.push_back(block(left));
  for (int i = 0; i < m; ++i) seq.push_back(block(BlockKind::M0));
  seq.push_back(mirror(block(right)));
  return assemble(std::move(seq));
}

Assembly build_H(int m, int i, int j) {
  if (m < 0 || i < 0 || i > 4 || j < 0 || j > 4)
    fail(Err::InvalidArgument, "build_H expects m >= 0 and 0 <= i,j <= 4");
  auto end_kind = [](int t) {
    switch (t) {
      case 0: return BlockKind::D0;
      case 1: return BlockKind::D1;
      case 2: return BlockKind::D2;
      case 3: return BlockKind::D3;
      default: return BlockKind::D4;
    }
  };
  std::vector<Block> seq;
  seq.push_back(block(end_kind(i)));
  for (int t = 0; t < m; ++t) seq.push_back(block(BlockKind::M0));
  seq.push_back(mirror(block(end_kind(j))));
  return assemble(std::move(seq));
}

namespace {

std::string base_kind(const Brick& b) {
  return b.mirrored ? b.kind.substr(0, b.kind.size() - 1) : b.kind;
}

}  // namespace

LongBlockResult build_long_block(const std::vector<Brick>& bricks, LongBlockType type) {
  if (bricks.size() < 2) fail(Err::GrammarViolation, "a long block has at least two bricks");
  const int s = int(bricks.size());
  for (int i = 1; i + 1 < s; ++i) {
    auto base = base_kind(bricks[i]);
    if (base != "M0''" && base != "M1''")
      fail(Err::GrammarViolation, "interior brick must be M0'' or M1'', got " + bricks[i].kind);
  }
  auto first = base_kind(bricks.front()), last = base_kind(bricks.back());
  bool first_d = (first == "D0'" || first == "D3'") && !bricks.front().mirrored;
  bool first_m = (first == "M0'" || first == "M1'" || first == "M2'") && !bricks.front().mirrored;
  bool last_m = (last == "M0'" || last == "M1'" || last == "M2'") && bricks.back().mirrored;
  bool last_d = (last == "D0'" || last == "D3'") && bricks.back().mirrored;
  switch (type) {
    case LongBlockType::End:
      if (!first_d || !last_m) fail(Err::GrammarViolation, "long end block is D'_0/D'_3 ... mirrored M'_k");
      break;
    case LongBlockType::Middle:
      if (!first_m || !last_m) fail(Err::GrammarViolation, "long middle block is M'_k ... mirrored M'_k");
      break;
    case LongBlockType::Complete:
      if (!first_d || !last_d) fail(Err::GrammarViolation, "long complete block is D'_0/D'_3 ... mirrored D'_0/D'_3");
      break;
  }

  std::vector<std::vector<int>> maps(s);
  int next_id = 0;
  for (int i = 0; i < s; ++i) {
    maps[i].resize(bricks[i].graph.n);
    for (int v = 0; v < bricks[i].graph.n; ++v) maps[i][v] = next_id++;
  }
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i)
    for (auto [u, v] : bricks[i].graph.edges) edges.emplace_back(maps[i][u], maps[i][v]);
  for (int i = 0; i + 1 < s; ++i) {
    if (!bricks[i].right_pair || !bricks[i + 1].left_pair)
      fail(Err::GrammarViolation, "bricks " + bricks[i].kind + " and " + bricks[i + 1].kind +
                                      " cannot be joined by parallel edges");
    auto [a1, a2] = *bricks[i].right_pair;
    auto [b1, b2] = *bricks[i + 1].left_pair;
    edges.emplace_back(maps[i][a1], maps[i + 1][b1]);
    edges.emplace_back(maps[i][a2], maps[i + 1][b2]);
  }
  Graph g = make_graph(next_id, std::move(edges));

  std::string kind = "[";
  for (int i = 0; i < s; ++i) kind += (i ? "+" : "") + bricks[i].kind;
  kind += "]";
  std::vector<std::vector<int>> cells;
  for (int i = 0; i < s; ++i)
    for (const auto& cell : bricks[i].cells) {
      std::vector<int> c;
      for (int v : cell) c.push_back(maps[i][v]);
      cells.push_back(std::move(c));
    }

  LongBlockResult res;
  if (type == LongBlockType::Complete) {
    if (!is_k_regular(g, 4)) fail(Err::GrammarViolation, "long complete block is not quartic");
    res.graph = std::move(g);
    return res;
  }
  Block b;
  b.graph = std::move(g);
  b.kind = std::move(kind);
  b.cells = std::move(cells);
  if (type == LongBlockType::Middle) b.left_attach = maps.front()[*bricks.front().left_attach];
  b.right_attach = maps.back()[*bricks.back().right_attach];
  res.block = std::move(b);
  return res;
}

LongBlockResult build_long_block(const std::vector<std::string>& brick_names, LongBlockType type) {
  std::vector<Brick> bricks;
  bricks.reserve(brick_names.size());
  for (const auto& name : brick_names) bricks.push_back(brick_by_name(name));
  return build_long_block(bricks, type);
}

bool is_palindromic(const Assembly& a) {
  const int k = int(a.blocks.size());
  for (int b = 0; b * 2 < k; ++b) {
    const Block& x = a.blocks[b];
    const Block& y = a.blocks[k - 1 - b];
    if (x.graph != y.graph) return false;
    if (x.kind == y.kind) {
      if (!self_mirror_involution(x)) return false;
    } else {
      // must be mirror images of one another (same fixture, roles swapped)
      bool mirror_pair = (x.mirrored != y.mirrored) &&
                         (x.kind == y.kind + "~" || y.kind == x.kind + "~");
      if (!mirror_pair) return false;
    }
  }
  return true;
}

std::vector<int> mirror_map(const Assembly& a) {
  const int k = int(a.blocks.size());
  const int n = a.graph.n;
  std::vector<int> sigma(n, -1);
  auto assign = [&](int from, int to) {
    if (sigma[from] != -1 && sigma[from] != to)
      fail(Err::NotPalindromic, "inconsistent mirror images at a cut vertex");
    sigma[from] = to;
  };
  for (int b = 0; b < k; ++b) {
    const Block& x = a.blocks[b];
    const Block& y = a.blocks[k - 1 - b];
    if (x.graph != y.graph)
      fail(Err::NotPalindromic, "block sequence does not equal its mirrored reverse");
    std::vector<int> phi(x.graph.n);
    if (x.kind != y.kind && (x.kind == y.kind + "~" || y.kind == x.kind + "~") &&
        x.mirrored != y.mirrored) {
      for (int v = 0; v < x.graph.n; ++v) phi[v] = v;  // same fixture, roles swapped
    } else if (x.kind == y.kind) {
      auto inv = self_mirror_involution(x);
      if (!inv) fail(Err::NotPalindromic, "block " + x.kind + " is not its own mirror image");
      phi = *inv;
    } else {
      fail(Err::NotPalindromic, "blocks " + x.kind + " and " + y.kind + " are not mirror images");
    }
    for (int v = 0; v < x.graph.n; ++v)
      assign(a.local_to_global[b][v], a.local_to_global[k - 1 - b][phi[v]]);
  }
  // must be an involution and an automorphism
  for (int v = 0; v < n; ++v)
    if (sigma[v] < 0 || sigma[sigma[v]] != v)
      fail(Err::NotPalindromic, "mirror map is not an involution");
  for (auto [u, v] : a.graph.edges)
    if (!has_edge(a.graph, sigma[u], sigma[v]))
      fail(Err::NotPalindromic, "mirror map is not an automorphism");
  return sigma;
}

}  // namespace specgap
