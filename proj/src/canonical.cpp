#include "canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace specgap {

namespace {

// Partition = ordered list of cells. Refinement splits every cell by the
// vector of neighbor counts into each current cell, ordering new subcells by
// that signature; the process depends only on graph structure, so the final
// cell order is isomorphism-invariant (McKay-style, simplified).
struct Refiner {
  const std::vector<std::vector<int>>& adj;
  int n;

  std::vector<std::vector<int>> refine(std::vector<std::vector<int>> cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<int> cell_of(n);
      for (int c = 0; c < int(cells.size()); ++c)
        for (int v : cells[c]) cell_of[v] = c;
      std::vector<std::vector<int>> next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
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
};

struct CanonSearch {
  const Graph& g;
  std::vector<std::vector<int>> adj;
  Refiner refiner;
  std::vector<std::uint8_t> best;      // best packed upper triangle so far
  std::vector<int> best_labeling;      // perm[old] = new
  bool have_best = false;

  explicit CanonSearch(const Graph& graph)
      : g(graph), adj(adjacency_list(graph)), refiner{adj, graph.n} {}

  std::vector<std::uint8_t> encode(const std::vector<int>& position_of) const {
    // bit (i,j), i<j in canonical positions, packed MSB-first
    std::vector<int> vertex_at(g.n);
    for (int v = 0; v < g.n; ++v) vertex_at[position_of[v]] = v;
    size_t nbits = size_t(g.n) * (g.n - 1) / 2;
    std::vector<std::uint8_t> bits((nbits + 7) / 8, 0);
    size_t k = 0;
    for (int i = 0; i < g.n; ++i)
      for (int j = i + 1; j < g.n; ++j, ++k)
        if (has_edge(g, vertex_at[i], vertex_at[j])) bits[k / 8] |= std::uint8_t(0x80u >> (k % 8));
    return bits;
  }

  void visit(const std::vector<std::vector<int>>& cells) {
    int branch_cell = -1;
    for (int c = 0; c < int(cells.size()); ++c)
      if (cells[c].size() > 1) {
        branch_cell = c;
        break;
      }
    if (branch_cell < 0) {
      std::vector<int> position_of(g.n);
      for (int c = 0; c < int(cells.size()); ++c) position_of[cells[c][0]] = c;
      auto enc = encode(position_of);
      if (!have_best || enc < best) {
        best = std::move(enc);
        best_labeling = std::move(position_of);
        have_best = true;
      }
      return;
    }
    for (int v : cells[branch_cell]) {
      std::vector<std::vector<int>> split;
      split.reserve(cells.size() + 1);
      for (int c = 0; c < int(cells.size()); ++c) {
        if (c != branch_cell) {
          split.push_back(cells[c]);
          continue;
        }
        split.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        split.push_back(std::move(rest));
      }
      visit(refiner.refine(std::move(split)));
    }
  }
};

}  // namespace

std::string CanonicalCert::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

static std::pair<CanonicalCert, std::vector<int>> canonical_impl(const Graph& g) {
  CanonSearch search(g);
  std::vector<std::vector<int>> unit;
  if (g.n > 0) {
    unit.emplace_back();
    for (int v = 0; v < g.n; ++v) unit[0].push_back(v);
  }
  if (g.n > 0) search.visit(search.refiner.refine(std::move(unit)));

  CanonicalCert cert;
  cert.bytes.reserve(4 + search.best.size());
  for (int shift = 24; shift >= 0; shift -= 8) cert.bytes.push_back(std::uint8_t((g.n >> shift) & 0xff));
  cert.bytes.insert(cert.bytes.end(), search.best.begin(), search.best.end());
  if (g.n == 0) search.best_labeling.clear();
  return {std::move(cert), std::move(search.best_labeling)};
}

CanonicalCert canonical_cert(const Graph& g) { return canonical_impl(g).first; }

std::vector<int> canonical_labeling(const Graph& g) { return canonical_impl(g).second; }

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  auto da = degrees(a), db = degrees(b);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> perm(a.n);
  for (int i = 0; i < a.n; ++i) perm[i] = i;
  // map a -> b by trying permutations; degree filter prunes most branches
  std::vector<int> map_to(a.n, -1);
  std::vector<char> used(a.n, 0);
  auto adj_a = adjacency_list(a);

  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (int u : adj_a[v]) {
        if (u < v && !has_edge(b, map_to[u], w)) {
          ok = false;
          break;
        }
      }
      // also reject extra adjacencies among placed vertices
      if (ok) {
        for (int u = 0; u < v && ok; ++u)
          if (!has_edge(a, u, v) && has_edge(b, map_to[u], w)) ok = false;
      }
      if (!ok) continue;
      used[w] = 1;
      map_to[v] = w;
      if (place(v + 1)) return true;
      used[w] = 0;
      map_to[v] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace specgap
