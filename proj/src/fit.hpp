#pragma once

#include <optional>

#include "blocks.hpp"
#include "partition.hpp"

namespace specgap {

// Witness that D' fits D: an equitable ordered partition of D, a compatible
// ordered partition of D' with cellwise-larger cells, and equal cross-cell
// edge counts. The attachment vertices sit in the last cell on both sides.
struct FitWitness {
  Partition pi;        // cells of D
  Partition pi_prime;  // cells of D'
  std::vector<std::vector<int>> edge_counts;  // d_ij of D between cells
};

// Conditions (i)-(iii) of the fits relation; does not require the attachment
// convention (callers that replace end blocks check it separately).
bool check_fit(const Block& d, const Block& d_prime, const FitWitness& w);

// Exhaustive search over equitable ordered partitions of D (attachment in
// the last cell) and matching partitions of D', at most p_max cells each.
// Blocks above 10 vertices raise SearchSpaceExceeded.
std::optional<FitWitness> find_fit_partition(const Block& d, const Block& d_prime, int p_max);

}  // namespace specgap
