#include "fit.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace specgap {

bool check_fit(const Block& d, const Block& d_prime, const FitWitness& w) {
  require_partition(w.pi, d.graph.n);
  require_partition(w.pi_prime, d_prime.graph.n);
  if (w.pi.size() != w.pi_prime.size()) return false;
  const size_t p = w.pi.size();
  if (!is_equitable(d.graph, w.pi)) return false;               // (i)
  for (size_t i = 0; i < p; ++i)
    if (w.pi[i].size() > w.pi_prime[i].size()) return false;    // (ii)
  auto counts = cross_edge_counts(d.graph, w.pi);
  auto counts_prime = cross_edge_counts(d_prime.graph, w.pi_prime);
  for (size_t i = 0; i < p; ++i)
    for (size_t j = i + 1; j < p; ++j)
      if (counts[i][j] != counts_prime[i][j]) return false;     // (iii)
  return true;
}

namespace {

// Enumerate unordered set partitions (restricted growth strings) with at
// most max_cells cells.
void each_set_partition(int n, int max_cells, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> cell_of(n, 0);
  std::function<void(int, int)> rec = [&](int v, int used) {
    if (v == n) {
      fn(cell_of, used);
      return;
    }
    for (int c = 0; c < used; ++c) {
      cell_of[v] = c;
      rec(v + 1, used);
    }
    if (used < max_cells) {
      cell_of[v] = used;
      rec(v + 1, used + 1);
    }
  };
  if (n > 0) rec(0, 0);
}

// Backtracking assignment of D' vertices to p ordered cells matching the
// target cross counts and minimum sizes, attachment forced into the last cell.
std::optional<Partition> match_partition(const Graph& g, int attach, int p,
                                         const std::vector<std::vector<int>>& target,
                                         const std::vector<int>& min_size) {
  const int n = g.n;
  auto adj = adjacency_list(g);
  std::vector<int> cell_of(n, -1);
  std::vector<char> placed(n, 0);
  std::vector<std::vector<int>> count(p, std::vector<int>(p, 0));
  std::vector<int> size(p, 0);
  cell_of[attach] = p - 1;
  placed[attach] = 1;
  size[p - 1] = 1;

  std::function<bool(int)> rec = [&](int v) -> bool {
    while (v < n && placed[v]) ++v;
    if (v == n) {
      for (int i = 0; i < p; ++i) {
        if (size[i] < std::max(min_size[i], 1)) return false;
        for (int j = i + 1; j < p; ++j)
          if (count[i][j] != target[i][j]) return false;
      }
      return true;
    }
    int remaining = 0;
    for (int u = v; u < n; ++u)
      if (!placed[u]) ++remaining;
    for (int c = 0; c < p; ++c) {
      cell_of[v] = c;
      placed[v] = 1;
      ++size[c];
      bool ok = true;
      std::vector<std::pair<int, int>> touched;
      for (int w : adj[v]) {
        if (!placed[w] || w == v) continue;  // each edge counted when its later endpoint lands
        int a = std::min(c, cell_of[w]), b = std::max(c, cell_of[w]);
        if (a != b) {
          ++count[a][b];
          touched.emplace_back(a, b);
          if (count[a][b] > target[a][b]) ok = false;
        }
      }
      // prune on overflow and on cells that can no longer reach their
      // minimum size
      if (ok) {
        int deficit = 0;
        for (int i = 0; i < p; ++i) deficit += std::max(0, std::max(min_size[i], 1) - size[i]);
        if (deficit > remaining - 1) ok = false;
      }
      if (ok && rec(v + 1)) return true;
      for (auto [a, b] : touched) --count[a][b];
      --size[c];
      placed[v] = 0;
      cell_of[v] = -1;
    }
    return false;
  };
  bool found = rec(0);
  if (!found) return std::nullopt;
  Partition cells(p);
  for (int v = 0; v < n; ++v) cells[cell_of[v]].push_back(v);
  return cells;
}

}  // namespace

std::optional<FitWitness> find_fit_partition(const Block& d, const Block& d_prime, int p_max) {
  if (d.graph.n > 10 || d_prime.graph.n > 10)
    fail(Err::SearchSpaceExceeded, "fit search supports blocks up to 10 vertices");
  if (p_max < 2) fail(Err::InvalidArgument, "need at least two cells");
  if (!d.right_attach || !d_prime.right_attach)
    fail(Err::InvalidArgument, "fit search expects end blocks with a right attachment");
  const int attach = *d.right_attach;
  const int attach_prime = *d_prime.right_attach;

  std::optional<FitWitness> found;
  each_set_partition(d.graph.n, p_max, [&](const std::vector<int>& cell_of, int k) {
    if (found || k < 2) return;
    Partition cells(k);
    for (int v = 0; v < d.graph.n; ++v) cells[cell_of[v]].push_back(v);
    if (!is_equitable(d.graph, cells)) return;
    // try orderings with the attachment cell last
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    int attach_cell = cell_of[attach];
    std::vector<int> rest;
    for (int c = 0; c < k; ++c)
      if (c != attach_cell) rest.push_back(c);
    std::sort(rest.begin(), rest.end());
    do {
      Partition pi;
      for (int c : rest) pi.push_back(cells[c]);
      pi.push_back(cells[attach_cell]);
      auto target = cross_edge_counts(d.graph, pi);
      std::vector<int> min_size(k);
      for (int i = 0; i < k; ++i) min_size[i] = int(pi[i].size());
      auto match = match_partition(d_prime.graph, attach_prime, k, target, min_size);
      if (match) {
        FitWitness w{pi, *match, target};
        if (check_fit(d, d_prime, w)) {
          found = std::move(w);
          return;
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  return found;
}

}  // namespace specgap
