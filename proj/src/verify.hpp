#pragma once

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "fiedler.hpp"
#include "fit.hpp"
#include "lemmas.hpp"
#include "sturm.hpp"

namespace specgap {

struct Table2Row {
  int n = 0;
  double mu = 0.0;
  double ceil3 = 0.0;          // mu rounded up to 3 decimals
  double expected_ceil3 = 0.0; // 0 when the row is not a checkpoint
  bool decreasing = true;      // strictly below the previous row
  bool pass = true;
};

struct Table2Report {
  std::vector<Table2Row> rows;
  bool all_ok = true;
};

// mu of the family member for n = 11..40: strictly decreasing, and the
// rounded-up values at n = 11, 13, 18, 21, 26 equal the published bounds.
Table2Report verify_table2();

struct H00Row {
  int m = 0;
  double rayleigh_value = 0.0;
  double f_value = 0.0;
  double perp_defect = 0.0;  // |x . 1|
  bool pass = true;
};

struct H00Report {
  std::vector<H00Row> rows;
  bool f6_ok = true;          // f(6) < 0.046
  bool decreasing_ok = true;  // f(m+1) < f(m) over the range
  bool all_ok = true;
};

H00Report verify_h00(int m_max = 50);

struct SandwichRow {
  int m = 0, i = 0, j = 0;
  double mu = 0.0;
  double mu44 = 0.0, mu00 = 0.0;
  double path_lower = 0.0;  // (4/25) mu(P_{m+11})
  double f_upper = 0.0;
  bool pass = true;
};

struct SandwichReport {
  std::vector<SandwichRow> rows;
  bool all_ok = true;
};

// (4/25) mu(P_{m+11}) <= mu(H_{4,4}) <= mu(H_{i,j}) <= mu(H_{0,0}) <= f(m).
SandwichReport verify_sandwich(int m_max = 12);

struct AsymptoticRow {
  int n = 0;
  double mu = 0.0;
  double ratio = 0.0;     // n^2 mu / (4 pi^2)
  double af_ratio = 0.0;  // tau * 2 pi^2 / (3 n^2), below 1 when the generic bound is slack
};

struct AsymptoticReport {
  std::vector<AsymptoticRow> rows;
  bool all_ok = true;  // ratios approach 1 monotonically along the given list
};

AsymptoticReport verify_asymptotic(const std::vector<int>& ns);

struct FitsRow {
  std::string base, candidate;
  bool found = false;
  bool witness_ok = false;
  int cells = 0;
};

struct FitsReport {
  std::vector<FitsRow> rows;
  bool all_ok = true;
};

// Every published fit pair: D_1..D_4 fit D_0; D_2..D_4 fit D_1; D_3 fits
// D_2; D_4 fits D_3. Witnesses recovered by search and re-checked.
FitsReport verify_fits();

struct StructureBatchRow {
  std::string family;
  int n = 0;
  FiedlerStructureReport report;
  bool pass = true;
};

struct StructureBatchReport {
  std::vector<StructureBatchRow> rows;
  bool all_ok = true;
};

// Fiedler shape across the family range plus skew symmetry of palindromic
// members.
StructureBatchReport verify_structure(int n_min = 11, int n_max = 100, int m_max = 8);

struct LemmaBatchReport {
  std::vector<LemmaRow> rows;
  bool all_ok = true;
};

LemmaBatchReport verify_lemmas(const std::string& name);

}  // namespace specgap
