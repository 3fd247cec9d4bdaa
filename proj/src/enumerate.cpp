#include "enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "assembly.hpp"
#include "spectra.hpp"

namespace specgap {

namespace {

int resolve_threads(int requested) {
  if (const char* env = std::getenv("SPECGAP_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

// Backtracking completion generator. Vertices are closed in index order;
// when vertex v is completed, its remaining partners are chosen among open
// vertices > v. Two reductions keep the tree small without losing any
// isomorphism class:
//  - partners are drawn as prefixes of interchangeability classes (vertices
//    with identical adjacency so far are equivalent);
//  - every vertex beyond the first must already touch the closed prefix
//    when its turn comes (connected graphs admit such an ordering).
// Leaves are connected and 4-regular; global dedup by canonical certificate.
struct Generator {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<int> deg;
  std::function<void(const Graph&)> emit;
  std::function<bool()> cancelled;

  explicit Generator(int n_) : n(n_), adj(n_, std::vector<char>(n_, 0)), deg(n_, 0) {}

  void add_edge(int u, int v) {
    adj[u][v] = adj[v][u] = 1;
    ++deg[u];
    ++deg[v];
  }
  void remove_edge(int u, int v) {
    adj[u][v] = adj[v][u] = 0;
    --deg[u];
    --deg[v];
  }

  Graph snapshot() const {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[u][v]) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
  }

  // group open candidates (> v, deg < 4) by adjacency history; within a
  // class only prefixes are canonical choices
  std::vector<std::vector<int>> candidate_classes(int v) const {
    std::map<std::vector<char>, std::vector<int>> groups;
    for (int w = v + 1; w < n; ++w) {
      if (deg[w] >= 4) continue;
      groups[adj[w]].push_back(w);
    }
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [key, members] : groups) out.push_back(std::move(members));
    return out;
  }

  void choose(int v, int need, const std::vector<std::vector<int>>& classes, size_t ci,
              std::vector<int>& picked) {
    if (cancelled && cancelled()) return;
    if (need == 0) {
      for (int w : picked) add_edge(v, w);
      complete(v + 1);
      for (int w : picked) remove_edge(v, w);
      return;
    }
    if (ci >= classes.size()) return;
    int avail = int(classes[ci].size());
    int take_max = std::min(need, avail);
    // leave enough capacity in later classes
    int later = 0;
    for (size_t cj = ci + 1; cj < classes.size(); ++cj) later += int(classes[cj].size());
    for (int take = std::max(0, need - later); take <= take_max; ++take) {
      for (int k = 0; k < take; ++k) picked.push_back(classes[ci][k]);
      choose(v, need - take, classes, ci + 1, picked);
      for (int k = 0; k < take; ++k) picked.pop_back();
    }
  }

  void complete(int v) {
    if (v == n) {
      emit(snapshot());
      return;
    }
    if (deg[v] == 4) {
      complete(v + 1);
      return;
    }
    // connected ordering: after the root every vertex must already be touched
    if (v > 0 && deg[v] == 0) return;
    int need = 4 - deg[v];
    auto classes = candidate_classes(v);
    int avail = 0;
    for (const auto& c : classes) avail += int(c.size());
    if (avail < need) return;
    std::vector<int> picked;
    picked.reserve(need);
    choose(v, need, classes, 0, picked);
  }
};

}  // namespace

std::vector<CensusEntry> enumerate_quartic(int n, const CensusOptions& opts) {
  if (n < 5 || n > 14) fail(Err::OrderCapExceeded, "census supports 5 <= n <= 14");
  if (n == 14 && !opts.allow_slow)
    fail(Err::OrderCapExceeded, "n = 14 runs for a long time; pass allow_slow");

  auto deadline_exceeded = [start = std::chrono::steady_clock::now(), &opts] {
    if (opts.cap_seconds <= 0.0) return false;
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    return elapsed.count() > opts.cap_seconds;
  };

  // seed states: complete vertex 0 (the canonical choice is {1,2,3,4}) and
  // fan out on vertex 1's completions; branches then run in parallel
  Generator seed(n);
  for (int w : {1, 2, 3, 4}) seed.add_edge(0, w);

  struct Branch {
    std::vector<Edge> edges;
  };
  std::vector<Branch> branches;
  {
    auto classes = seed.candidate_classes(1);
    std::vector<int> picked;
    // capture each completion of vertex 1 as a branch seed
    std::function<void(int, size_t)> rec = [&](int need, size_t ci) {
      if (need == 0) {
        Branch b;
        for (int w : {1, 2, 3, 4}) b.edges.emplace_back(0, w);
        for (int w : picked) b.edges.emplace_back(1, w);
        branches.push_back(std::move(b));
        return;
      }
      if (ci >= classes.size()) return;
      int later = 0;
      for (size_t cj = ci + 1; cj < classes.size(); ++cj) later += int(classes[cj].size());
      int take_max = std::min(need, int(classes[ci].size()));
      for (int take = std::max(0, need - later); take <= take_max; ++take) {
        for (int k = 0; k < take; ++k) picked.push_back(classes[ci][k]);
        rec(need - take, ci + 1);
        for (int k = 0; k < take; ++k) picked.pop_back();
      }
    };
    rec(4 - seed.deg[1], 0);
  }

  int threads = std::min<int>(resolve_threads(opts.threads), int(branches.size()));
  threads = std::max(threads, 1);
  std::vector<std::set<CanonicalCert>> partial(threads);
  std::vector<std::map<CanonicalCert, Graph>> graphs(threads);
  std::atomic<size_t> next{0};
  std::atomic<bool> timed_out{false};

  auto worker = [&](int tid) {
    Generator gen(n);
    gen.cancelled = [&] {
      if (timed_out.load(std::memory_order_relaxed)) return true;
      if (deadline_exceeded()) {
        timed_out.store(true, std::memory_order_relaxed);
        return true;
      }
      return false;
    };
    gen.emit = [&](const Graph& g) {
      auto cert = canonical_cert(g);
      if (partial[tid].insert(cert).second) graphs[tid].emplace(std::move(cert), g);
    };
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= branches.size()) break;
      for (auto [u, v] : branches[i].edges) gen.add_edge(u, v);
      gen.complete(1);  // vertex 1 closed by the branch seed; continue from it
      for (auto [u, v] : branches[i].edges) gen.remove_edge(u, v);
      if (gen.cancelled()) break;
    }
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& t : pool) t.join();
  if (timed_out.load()) fail(Err::OrderCapExceeded, "census aborted by the time cap");

  std::map<CanonicalCert, Graph> merged;
  for (auto& m : graphs) merged.merge(m);

  std::vector<CensusEntry> out;
  out.reserve(merged.size());
  for (auto& [cert, g] : merged) {
    CensusEntry e;
    e.cert = cert;
    e.mu = mu_of(g);
    e.graph = std::move(g);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CensusEntry> find_minimal(const std::vector<CensusEntry>& census, double tol) {
  std::vector<CensusEntry> out;
  if (census.empty()) return out;
  double best = census.front().mu;
  for (const auto& e : census) best = std::min(best, e.mu);
  for (const auto& e : census)
    if (e.mu - best < tol) out.push_back(e);
  return out;
}

namespace {

// Block-cut decomposition: returns the vertex sets of the biconnected
// components, in an arbitrary order.
std::vector<std::vector<int>> biconnected_components(const Graph& g) {
  auto adj = adjacency_list(g);
  std::vector<int> num(g.n, -1), low(g.n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> comps;
  int counter = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    num[u] = low[u] = counter++;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (num[w] == -1) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= num[u]) {
          std::vector<int> comp;
          std::vector<char> seen(g.n, 0);
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            for (int x : {a, b})
              if (!seen[x]) {
                seen[x] = 1;
                comp.push_back(x);
              }
            if (a == u && b == w) break;
          }
          comps.push_back(std::move(comp));
        }
      } else if (num[w] < num[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], num[w]);
      }
    }
  };
  if (g.n > 0) dfs(0, -1);
  return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> index(g.n, -1);
  for (int i = 0; i < int(verts.size()); ++i) index[verts[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges)
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return make_graph(int(verts.size()), std::move(edges));
}

}  // namespace

bool matches_family_template(const Graph& g) {
  if (!is_k_regular(g, 4) || !is_connected(g)) return false;
  auto comps = biconnected_components(g);
  if (comps.size() < 2) return false;

  // count component membership to find cut vertices
  std::vector<int> uses(g.n, 0);
  for (const auto& comp : comps)
    for (int v : comp) ++uses[v];
  int cut_count = 0;
  for (int v = 0; v < g.n; ++v) {
    if (uses[v] > 2) return false;
    if (uses[v] == 2) ++cut_count;
  }
  if (cut_count != int(comps.size()) - 1) return false;  // block tree must be a path

  static const std::vector<std::pair<CanonicalCert, bool>> catalog = [] {
    std::vector<std::pair<CanonicalCert, bool>> c;  // (cert, is_middle)
    c.emplace_back(canonical_cert(block(BlockKind::M0).graph), true);
    for (auto k : {BlockKind::D0, BlockKind::D1, BlockKind::D2, BlockKind::D3, BlockKind::D4})
      c.emplace_back(canonical_cert(block(k).graph), false);
    return c;
  }();

  int end_blocks = 0;
  for (const auto& comp : comps) {
    int cuts_inside = 0;
    for (int v : comp)
      if (uses[v] == 2) ++cuts_inside;
    auto cert = canonical_cert(induced_subgraph(g, comp));
    bool matched = false;
    for (const auto& [bc, is_middle] : catalog) {
      if (cert != bc) continue;
      matched = true;
      if (is_middle && cuts_inside != 2) return false;
      if (!is_middle && cuts_inside != 1) return false;
      if (!is_middle) ++end_blocks;
      break;
    }
    if (!matched) return false;
  }
  return end_blocks == 2;
}

MinimalityReport certify_minimal(int n, const CensusOptions& opts) {
  MinimalityReport rep;
  rep.n = n;
  auto census = enumerate_quartic(n, opts);
  rep.census_size = census.size();
  rep.minimal = find_minimal(census);
  rep.unique = rep.minimal.size() == 1;
  if (!rep.minimal.empty()) {
    rep.mu_min = rep.minimal.front().mu;
    if (n >= 11) {
      auto family_cert = canonical_cert(build_G_n(n).graph);
      rep.matches_family = rep.unique && rep.minimal.front().cert == family_cert;
    }
    rep.template_ok = true;
    for (const auto& e : rep.minimal)
      if (!matches_family_template(e.graph)) rep.template_ok = false;
  }
  return rep;
}

std::vector<CanonicalCert> complement_oracle(int n) {
  if (n < 5 || n > 8) fail(Err::InvalidArgument, "complement oracle covers 5 <= n <= 8");
  int k = n - 5;  // complement degree
  // brute-force enumeration of all labeled k-regular graphs, dedup by cert
  std::set<CanonicalCert> quartic;
  std::vector<Edge> all_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  std::vector<int> deg(n, 0);
  // rem[v] = pairs at index >= i touching v, for feasibility pruning
  std::vector<int> rem(n, n - 1);
  std::vector<Edge> chosen;

  std::function<void(size_t)> rec = [&](size_t i) {
    bool full = true;
    for (int v = 0; v < n; ++v) {
      if (deg[v] != k) full = false;
      if (k - deg[v] > rem[v]) return;
    }
    if (full) {
      Graph comp = complement(make_graph(n, chosen));
      if (is_connected(comp) && is_k_regular(comp, 4)) quartic.insert(canonical_cert(comp));
      return;
    }
    if (i == all_pairs.size()) return;
    auto [u, v] = all_pairs[i];
    --rem[u];
    --rem[v];
    rec(i + 1);
    if (deg[u] < k && deg[v] < k) {
      ++deg[u];
      ++deg[v];
      chosen.push_back(all_pairs[i]);
      rec(i + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    ++rem[u];
    ++rem[v];
  };
  rec(0);
  return {quartic.begin(), quartic.end()};
}

Graph random_quartic(int n, std::uint64_t seed) {
  if (n < 5) fail(Err::InvalidArgument, "need n >= 5");
  std::mt19937_64 rng(seed);
  for (;;) {
    // pairing model: 4 half-edges per vertex, uniform perfect matching
    std::vector<int> stubs;
    stubs.reserve(4 * n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 4; ++i) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!simple) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g = make_graph(n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

}  // namespace specgap
