#pragma once

#include <string>
#include <vector>

#include "enumerate.hpp"
#include "spectra.hpp"
#include "verify.hpp"

namespace specgap {

// Deterministic text renderings of the reports: floats carry 12 significant
// digits, rows keep a fixed order, CSV headers are versioned.

std::string format_double(double v);

std::string spectral_report_json(const Graph& g, const SpectralReport& r);
std::string structure_report_json(const std::string& family, int n,
                                  const FiedlerStructureReport& r);
std::string mu_range_csv(int n_from, int n_to);
std::string table2_csv(const Table2Report& r);
std::string h00_csv(const H00Report& r);
std::string sandwich_csv(const SandwichReport& r);
std::string asymptotic_csv(const AsymptoticReport& r);
std::string fits_json(const FitsReport& r);
std::string lemma_rows_json(const std::vector<LemmaRow>& rows);
std::string roots_csv(const RootClaimReport& r);
std::string certify_json(const MinimalityReport& r);

}  // namespace specgap
