#pragma once

#include <string>
#include <vector>

#include "assembly.hpp"
#include "gadgets.hpp"
#include "graph.hpp"

namespace specgap {

// Closed-form interior components for the replacement arguments, as exact
// rational functions of mu evaluated in double precision.
//
// Boundary/value conventions per name:
//   "E3":  in [x1]        out [x2, x3]
//   "E2":  in [x1]        out [x2, x3]
//   "E1":  in [x1]        out [x2, x3, x4, z1, z2, z3]
//   "H1":  in [xr, far]   out [x_{r+1}, x_{r+2}, z_{r+1}, z_{r+2}]
//   "H2":  in [xr, far]   out [x_{r+1..r+3}, z_{r+1..r+3}]
//   "H3":  in [xr, far]   out [x_{r+1..r+3}, z_{r+1..r+3}]
//   "H4":  in [xr, far]   out [x_{r+1..r+4}, z_{r+1..r+4}]
//   "H5":  in [x1]        out [x2..x6, z1..z4]
//   "H6":  in [x8]        out [x1..x7, z1..z5]
// Raises MuOutOfRange when mu is not below the lemma's order bound, and
// UnknownFormula for other names.
std::vector<double> lemma_formula(const std::string& name, double mu,
                                  const std::vector<double>& boundary);

double lemma_mu_bound(const std::string& name);

struct LemmaRow {
  std::string lemma;
  std::string instance;
  std::string type;  // "compare" | "replace"
  int n = 0;
  double mu_before = 0.0;   // mu of the host (or of the worse graph)
  double mu_after = 0.0;    // mu of the modified (or better) graph
  double bound_after = 0.0; // shifted bound certifying the decrease
  double margin = 0.0;      // mu_before - mu_after
  double h = 0.0, h_prime = 0.0, epsilon = 0.0, delta = 0.0, criterion = 0.0;
  std::string hypothesis_status = "ok";
  bool pass = false;
};

std::vector<std::string> lemma_names();

// Runs the built-in instances of one replacement lemma (or "all").
std::vector<LemmaRow> run_lemma_experiment(const std::string& name);

// Custom host variant: embeds must match the named gadget pair.
LemmaRow run_gadget_replacement(const std::string& lemma, const std::string& instance,
                                const Assembly& host, const Gadget& oldg,
                                const std::vector<int>& embed, const Gadget& newg);

}  // namespace specgap
