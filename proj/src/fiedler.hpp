#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "graph.hpp"
#include "partition.hpp"

namespace specgap {

struct FiedlerStructureReport {
  bool cell_constant = false;
  double max_spread = 0.0;
  std::vector<double> cell_means;
  bool decreasing = false;
  int sign_changes = 0;
  std::vector<int> zero_cells;         // |mean| <= tol; excluded from the sign count
  std::vector<int> exceptional_cells;  // spread failures confined to merged head cells
  bool indeterminate = false;          // set when gap23 makes the Fiedler vector unstable
  std::optional<bool> skew_symmetric;
  double skew_defect = 0.0;
};

// Checks the expected Fiedler shape over an ordered partition: constant on
// each cell (spread <= spread_tol), strictly decreasing cell means (margin),
// sign changing once. A mirror involution enables the skew-symmetry check.
FiedlerStructureReport fiedler_structure(const Graph& g, std::span<const double> x,
                                         const Partition& cells, double spread_tol = 1e-7,
                                         double margin = 1e-9,
                                         const std::vector<std::string>* labels = nullptr,
                                         const std::vector<int>* mirror = nullptr);

// Convenience: run the check on an assembly's own structural cells; marks
// the report indeterminate when gap23 < gap_guard.
FiedlerStructureReport fiedler_structure(const Assembly& a, double spread_tol = 1e-7,
                                         double margin = 1e-9, double gap_guard = 1e-8);

}  // namespace specgap
