#pragma once

#include <optional>
#include <string>
#include <vector>

#include "intpoly.hpp"

namespace specgap {

// Exact rational bracket around one real root.
struct RootInterval {
  BigRat lo, hi;

  double mid_double() const { return ((lo + hi) / 2).convert_to<double>(); }
  double width_double() const { return (hi - lo).convert_to<double>(); }
};

// Number of distinct real roots in (a, b]; endpoints must not be roots of
// the squarefree part (a is allowed to be a root boundary via limits).
int sturm_count(const IntPolynomial& p, const BigRat& a, const BigRat& b);

// All distinct real roots in (lo, hi), each bracketed to width <= precision.
// Exact arithmetic throughout; works on the squarefree part internally.
std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, BigRat lo, BigRat hi,
                                        const BigRat& precision);

// Cauchy bound: all real roots lie in [-B, B].
BigRat root_bound(const IntPolynomial& p);

struct RootClaim {
  std::string id;          // which argument the value comes from
  IntPolynomial poly;
  double quoted;           // the approximate value as printed
};

struct SignFact {
  std::string id;
  IntPolynomial poly;
  BigRat upper;            // interval (0, upper]
  int expected_sign;       // +1 / -1, 0 = merely nonzero on the interval
};

struct RootClaimResult {
  std::string id;
  double quoted;
  double lo, hi;           // refined bracket of the smallest root in (0, 1)
  double smallest_real;    // smallest real root anywhere (can differ)
  bool matched;
};

struct SignFactResult {
  std::string id;
  std::string interval;
  int expected_sign;
  bool holds;
};

struct RootClaimReport {
  std::vector<RootClaimResult> claims;
  std::vector<SignFactResult> facts;
  bool all_ok;
};

const std::vector<RootClaim>& root_claims();
const std::vector<SignFact>& sign_facts();

// Verifies every quoted approximate root (bracket width 1e-6, match within
// 0.001) and every strict sign statement the arguments rely on.
RootClaimReport verify_root_claims();

}  // namespace specgap
