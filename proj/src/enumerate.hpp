#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace specgap {

struct CensusEntry {
  CanonicalCert cert;
  Graph graph;
  double mu = 0.0;
};

struct CensusOptions {
  int threads = 0;               // 0 = SPECGAP_THREADS env or hardware
  double cap_seconds = 0.0;      // 0 = no cap; exceeded -> OrderCapExceeded
  bool allow_slow = false;       // required for n = 14
};

// Every connected 4-regular simple graph on n vertices, exactly once up to
// isomorphism, sorted by certificate. Desk-scale cap: 5 <= n <= 14.
std::vector<CensusEntry> enumerate_quartic(int n, const CensusOptions& opts = {});

// All entries attaining the minimum algebraic connectivity, ties within tol.
std::vector<CensusEntry> find_minimal(const std::vector<CensusEntry>& census, double tol = 1e-10);

struct MinimalityReport {
  int n = 0;
  size_t census_size = 0;
  std::vector<CensusEntry> minimal;
  bool unique = false;
  bool matches_family = false;       // minimal graph isomorphic to the order-n family member
  bool template_ok = false;          // path-like, all middles M_0, ends among D_0..D_4
  double mu_min = 0.0;
};

MinimalityReport certify_minimal(int n, const CensusOptions& opts = {});

// Structural recognizer used by the census: block decomposition along cut
// vertices, each block matched against the catalog.
bool matches_family_template(const Graph& g);

// Independent cross-checks ------------------------------------------------

// Complement-based oracle for n <= 8: connected quartic graphs arise as
// complements of (n-5)-regular graphs, which are enumerated by brute force.
std::vector<CanonicalCert> complement_oracle(int n);

// Uniform-ish random connected quartic graph via the pairing model.
Graph random_quartic(int n, std::uint64_t seed);

}  // namespace specgap
