#include "replace.hpp"

#include <algorithm>
#include <cmath>

#include "spectra.hpp"

namespace specgap {

double criterion_value(double h, double h_prime, double epsilon, double mu) {
  return h_prime - h - epsilon * mu;
}

ReplacementOutcome replace_end_block(const Assembly& g, const Block& d_prime, const FitWitness& w,
                                     double cell_tol) {
  const Block& d = g.blocks.front();
  try {
    if (!check_fit(d, d_prime, w)) fail(Err::FitViolated, "witness fails the fit conditions");
  } catch (const Error& e) {
    fail(Err::FitViolated, std::string("witness malformed: ") + e.what());
  }
  if (w.pi.back().size() != 1 || w.pi.back()[0] != *d.right_attach ||
      std::find(w.pi_prime.back().begin(), w.pi_prime.back().end(), *d_prime.right_attach) ==
          w.pi_prime.back().end())
    fail(Err::FitViolated, "attachment vertices must share the last cell");

  auto rep = algebraic_connectivity(g);
  const double mu = rep.mu;
  const auto& x = rep.fiedler;

  // cell values of the Fiedler vector on the old end block
  const size_t p = w.pi.size();
  std::vector<double> a(p);
  for (size_t i = 0; i < p; ++i) {
    double lo = 0.0, hi = 0.0, sum = 0.0;
    bool first = true;
    for (int v : w.pi[i]) {
      double xv = x[g.local_to_global[0][v]];
      if (first) {
        lo = hi = xv;
        first = false;
      }
      lo = std::min(lo, xv);
      hi = std::max(hi, xv);
      sum += xv;
    }
    if (hi - lo > cell_tol)
      fail(Err::CellNotConstant, "Fiedler vector is not constant on witness cell " + std::to_string(i));
    a[i] = sum / double(w.pi[i].size());
  }

  std::vector<Block> blocks;
  blocks.push_back(d_prime);
  for (size_t i = 1; i < g.blocks.size(); ++i) blocks.push_back(g.blocks[i]);
  Assembly gp = assemble(std::move(blocks));

  std::vector<double> xp(gp.graph.n, 0.0);
  for (size_t i = 0; i < p; ++i)
    for (int v : w.pi_prime[i]) xp[gp.local_to_global[0][v]] = a[i];
  for (size_t b = 1; b < g.blocks.size(); ++b)
    for (int v = 0; v < g.blocks[b].graph.n; ++v)
      xp[gp.local_to_global[b][v]] = x[g.local_to_global[b][v]];

  ReplacementOutcome out;
  out.x_prime = xp;
  out.mu_before = mu;

  std::vector<Edge> old_block_edges, new_block_edges;
  for (auto [u, v] : d.graph.edges)
    old_block_edges.emplace_back(g.local_to_global[0][u], g.local_to_global[0][v]);
  for (auto [u, v] : d_prime.graph.edges)
    new_block_edges.emplace_back(gp.local_to_global[0][u], gp.local_to_global[0][v]);
  out.h = edge_energy(old_block_edges, x);
  out.h_prime = edge_energy(new_block_edges, xp);
  out.ell = edge_energy(g.graph.edges, x) - out.h;
  out.ell_prime = edge_energy(gp.graph.edges, xp) - out.h_prime;

  double delta = 0.0, norm2 = 0.0;
  for (double v : xp) {
    delta += v;
    norm2 += v * v;
  }
  out.delta = delta;
  out.epsilon = norm2 - delta * delta / gp.graph.n - 1.0;
  out.criterion = criterion_value(out.h, out.h_prime, out.epsilon, mu);
  out.bound = shifted_bound(gp.graph, xp).bound;
  out.mu_after = mu_of(gp.graph);
  out.g_prime = std::move(gp.graph);
  return out;
}

void check_embedding(const Graph& host, const Gadget& g, const std::vector<int>& embed) {
  if (int(embed.size()) != g.graph.n) fail(Err::GadgetNotFound, "embedding has wrong arity");
  std::vector<char> in_gadget(host.n, 0);
  for (int v : embed) {
    if (v < 0 || v >= host.n || in_gadget[v]) fail(Err::GadgetNotFound, "embedding is not injective");
    in_gadget[v] = 1;
  }
  // induced copy
  for (int a = 0; a < g.graph.n; ++a)
    for (int b = a + 1; b < g.graph.n; ++b)
      if (has_edge(g.graph, a, b) != has_edge(host, embed[a], embed[b]))
        fail(Err::GadgetNotFound, "embedding is not an induced copy");
  // slot counts = outside degrees
  auto adj = adjacency_list(host);
  std::vector<int> slots(g.graph.n, 0);
  for (auto [v, c] : g.frontier) slots[v] = c;
  for (int a = 0; a < g.graph.n; ++a) {
    int outside = 0;
    for (int w : adj[embed[a]])
      if (!in_gadget[w]) ++outside;
    if (outside != slots[a])
      fail(Err::GadgetNotFound, "frontier slots do not match outside degrees");
  }
}

Graph splice_gadget(const Graph& host, const Gadget& oldg, const std::vector<int>& embed,
                    const Gadget& newg, std::vector<int>* new_embed_out) {
  check_embedding(host, oldg, embed);
  if (oldg.graph.n != newg.graph.n)
    fail(Err::InvalidArgument, "replacement must preserve the vertex count");
  if (oldg.slot_total() != newg.slot_total())
    fail(Err::InvalidArgument, "replacement must preserve the slot count");

  std::vector<char> in_gadget(host.n, 0);
  for (int v : embed) in_gadget[v] = 1;

  // far endpoints in frontier order
  auto adj = adjacency_list(host);
  std::vector<int> far;
  for (auto [v, c] : oldg.frontier) {
    std::vector<int> outs;
    for (int w : adj[embed[v]])
      if (!in_gadget[w]) outs.push_back(w);
    std::sort(outs.begin(), outs.end());
    if (int(outs.size()) != c) fail(Err::GadgetNotFound, "slot count mismatch");
    far.insert(far.end(), outs.begin(), outs.end());
  }

  // new gadget locals occupy the removed ids in ascending order
  std::vector<int> removed = embed;
  std::sort(removed.begin(), removed.end());
  std::vector<int> new_embed(newg.graph.n);
  for (int i = 0; i < newg.graph.n; ++i) new_embed[i] = removed[i];

  std::vector<Edge> edges;
  for (auto [u, v] : host.edges)
    if (!in_gadget[u] && !in_gadget[v]) edges.emplace_back(u, v);
  for (auto [u, v] : newg.graph.edges) edges.emplace_back(new_embed[u], new_embed[v]);
  size_t k = 0;
  for (auto [v, c] : newg.frontier)
    for (int i = 0; i < c; ++i) edges.emplace_back(new_embed[v], far[k++]);

  size_t before = edges.size();
  Graph out = make_graph(host.n, std::move(edges));
  if (out.edges.size() != before) fail(Err::GadgetNotFound, "splice produced a multigraph");
  if (new_embed_out) *new_embed_out = std::move(new_embed);
  return out;
}

}  // namespace specgap
