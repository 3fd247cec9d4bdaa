#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace specgap {

// Canonical relabeling certificate: equal bytes iff the graphs are isomorphic.
struct CanonicalCert {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCert&) const = default;
  std::string hex() const;
};

CanonicalCert canonical_cert(const Graph& g);

// The relabeling realizing the certificate: perm[old_id] = canonical position.
std::vector<int> canonical_labeling(const Graph& g);

// Exhaustive permutation check, for cross-validation on small graphs.
bool brute_force_isomorphic(const Graph& a, const Graph& b);

}  // namespace specgap
