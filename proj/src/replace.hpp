#pragma once

#include <vector>

#include "assembly.hpp"
#include "fit.hpp"
#include "gadgets.hpp"
#include "graph.hpp"

namespace specgap {

struct ReplacementOutcome {
  Graph g_prime;
  std::vector<double> x_prime;
  double h = 0.0;         // energy on the replaced part under x
  double h_prime = 0.0;   // energy on the replacement under x'
  double ell = 0.0;       // untouched energy in G
  double ell_prime = 0.0; // untouched energy in G' (must agree with ell)
  double delta = 0.0;     // x' . 1
  double epsilon = 0.0;   // |x'|^2 - delta^2/n' - 1
  double criterion = 0.0; // h' - h - epsilon * mu
  double bound = 0.0;     // shifted bound of x' on G'
  double mu_before = 0.0;
  double mu_after = 0.0;
};

// h' - h - epsilon*mu; a negative value certifies mu(G') < mu(G).
double criterion_value(double h, double h_prime, double epsilon, double mu);

// Replace the left end block of g by d_prime using a fit witness. The
// Fiedler vector must be constant on the witness cells of the old block.
ReplacementOutcome replace_end_block(const Assembly& g, const Block& d_prime, const FitWitness& w,
                                     double cell_tol = 1e-7);

// Replace an embedded gadget by another with the same vertex and slot
// counts; far endpoints of frontier slots carry over in order.
// embed maps old-gadget locals to host ids; new_embed_out (optional)
// receives the placement of the new gadget's locals.
Graph splice_gadget(const Graph& host, const Gadget& oldg, const std::vector<int>& embed,
                    const Gadget& newg, std::vector<int>* new_embed_out = nullptr);

// Raises GadgetNotFound unless embed is an induced copy of g with matching
// frontier slot counts.
void check_embedding(const Graph& host, const Gadget& g, const std::vector<int>& embed);

}  // namespace specgap
