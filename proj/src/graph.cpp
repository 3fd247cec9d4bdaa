#include "graph.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace specgap {

Graph make_graph(int n, std::vector<Edge> edges) {
  if (n < 0) fail(Err::InvalidArgument, "vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v) fail(Err::LoopEdge, "loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Err::IndexOutOfRange,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds n=" + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

bool is_k_regular(const Graph& g, int k) {
  for (int d : degrees(g))
    if (d != k) return false;
  return true;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  auto adj = adjacency_list(g);
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.n;
}

bool has_edge(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  return std::binary_search(g.edges.begin(), g.edges.end(), Edge{u, v});
}

std::vector<std::vector<int>> adjacency_list(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!has_edge(g, u, v)) edges.emplace_back(u, v);
  return make_graph(g.n, std::move(edges));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (int(perm.size()) != g.n) fail(Err::DimensionMismatch, "permutation length != n");
  std::vector<char> hit(g.n, 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n || hit[p]) fail(Err::InvalidArgument, "not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return make_graph(g.n, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges;
  for (auto [u, v] : h.edges) edges.emplace_back(u + g.n, v + g.n);
  return make_graph(g.n + h.n, std::move(edges));
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix m(g.n);
  for (auto [u, v] : g.edges) {
    m.at(u, v) = -1.0;
    m.at(u, u) += 1.0;
    m.at(v, v) += 1.0;
  }
  return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.n);
  for (auto [u, v] : g.edges) m.at(u, v) = 1.0;
  return m;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Err::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    fail(Err::ParseError, "expected {\"n\": int, \"edges\": [[u,v],...]}");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) fail(Err::ParseError, "edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(j["n"].get<int>(), std::move(edges));
}

}  // namespace specgap
