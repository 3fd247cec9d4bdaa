#include "sturm.hpp"

#include <algorithm>

#include "errors.hpp"

namespace specgap {

namespace {

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain;
  chain.push_back(squarefree_part(p));
  if (chain[0].degree() >= 1) {
    chain.push_back(primitive_part(derivative(chain[0])));
    while (chain.back().degree() >= 1) {
      IntPolynomial r = pseudo_remainder_primitive(chain[chain.size() - 2], chain.back());
      if (r.is_zero()) break;
      // Sturm chain negates remainders
      for (auto& c : r.coeffs) c = -c;
      chain.push_back(std::move(r));
    }
  }
  return chain;
}

int sign_of(const BigRat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_changes_at(const std::vector<IntPolynomial>& chain, const BigRat& t) {
  int changes = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_of(eval(q, t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_in(const std::vector<IntPolynomial>& chain, const BigRat& a, const BigRat& b) {
  return sign_changes_at(chain, a) - sign_changes_at(chain, b);
}

}  // namespace

int sturm_count(const IntPolynomial& p, const BigRat& a, const BigRat& b) {
  if (a >= b) fail(Err::InvalidArgument, "empty interval");
  auto chain = sturm_chain(p);
  return count_in(chain, a, b);
}

BigRat root_bound(const IntPolynomial& p) {
  if (p.is_zero() || p.degree() == 0) return 1;
  BigInt maxc = 0;
  for (int i = 0; i < p.degree(); ++i)
    maxc = std::max(maxc, BigInt(boost::multiprecision::abs(p.coeffs[i])));
  BigInt lead = boost::multiprecision::abs(p.leading());
  // 1 + max|a_i| / |a_n|, rounded up
  return BigRat(lead + maxc, lead);
}

std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, BigRat lo, BigRat hi,
                                        const BigRat& precision) {
  if (precision <= 0) fail(Err::InvalidArgument, "precision must be positive");
  auto chain = sturm_chain(p);
  const IntPolynomial& sq = chain[0];
  if (sq.degree() < 1) return {};
  // nudge endpoints off roots
  while (eval(sq, lo) == 0) lo -= precision / 2;
  while (eval(sq, hi) == 0) hi += precision / 2;

  std::vector<RootInterval> out;
  struct Item {
    BigRat lo, hi;
    int count;
  };
  std::vector<Item> stack{{lo, hi, count_in(chain, lo, hi)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 0) continue;
    if (it.count == 1 && it.hi - it.lo <= precision) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    BigRat mid = (it.lo + it.hi) / 2;
    if (eval(sq, mid) == 0) {
      // land the midpoint in its own tiny bracket
      BigRat span = it.hi - it.lo;
      BigRat eps = (precision < span ? precision : span) / 4;
      BigRat a = mid - eps, b = mid + eps;
      while (eval(sq, a) == 0) a -= eps / 2;
      while (eval(sq, b) == 0) b += eps / 2;
      out.push_back({a, b});
      int left = count_in(chain, it.lo, a);
      int right = count_in(chain, b, it.hi);
      if (left > 0) stack.push_back({it.lo, a, left});
      if (right > 0) stack.push_back({b, it.hi, right});
      continue;
    }
    int left = count_in(chain, it.lo, mid);
    if (left > 0) stack.push_back({it.lo, mid, left});
    if (it.count - left > 0) stack.push_back({mid, it.hi, it.count - left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
    return a.lo < b.lo;
  });
  return out;
}

namespace {

// polynomials named by where the quoted value appears in the arguments
IntPolynomial cubic_end_k4() { return poly_desc({1, -8, 14, -5}); }
IntPolynomial p1_end_k4() { return poly_desc({1, -17, 104, -275, 297, -90, 8}); }
IntPolynomial p2_end_k4() { return poly_desc({1, -19, 132, -399, 475, -150, 0}); }
IntPolynomial p4_end_k4() { return poly_desc({19, -325, 2004, -5349, 5821, -1770, 144}); }
IntPolynomial cubic_mid_h3() { return poly_desc({1, -10, 27, -4}); }
IntPolynomial quartic_m3_head() { return poly_desc({1, -14, 67, -126, 46}); }
IntPolynomial quintic_d0m3() { return poly_desc({1, -18, 119, -348, 408, -100}); }
IntPolynomial pa_d0m3() { return poly_desc({1, -28, 326, -2042, 7429, -15770, 18492, -10320, 1800, -96}); }
IntPolynomial pb_d0m3() { return poly_desc({2, -46, 418, -1886, 4296, -4280, 1000, 0}); }
IntPolynomial p1_d2m3() {
  return poly_desc({1, -39, 668, -6606, 41701, -175339, 497026, -939272, 1140452, -823624,
                    300472, -36080, 1344});
}
IntPolynomial p2_d2m3() {
  return poly_desc({2, -68, 992, -8100, 40446, -126432, 242312, -264520, 137816, -20208, 0});
}
IntPolynomial p3_d2m3() { return poly_desc({1, -28, 328, -2082, 7731, -16830, 20176, -11204, 1684}); }

BigRat frac(long long num, long long den) { return BigRat(num, den); }

}  // namespace

const std::vector<RootClaim>& root_claims() {
  static const std::vector<RootClaim> claims = [] {
    std::vector<RootClaim> c;
    c.push_back({"end-d0-k4 cubic", cubic_end_k4(), 0.481});
    c.push_back({"end-d0-k4 p1", p1_end_k4(), 0.171});
    c.push_back({"end-d0-k4 p4", p4_end_k4(), 0.132});
    c.push_back({"mid-h3 cubic", cubic_mid_h3(), 0.157});
    c.push_back({"m3-head quartic", quartic_m3_head(), 0.472});
    c.push_back({"d2-m3 p3", p3_d2m3(), 0.227});
    c.push_back({"d2-m3 p1", p1_d2m3(), 0.081});
    c.push_back({"d2-m3 p4", add(scale(p1_d2m3(), 26), p2_d2m3()), 0.070});
    return c;
  }();
  return claims;
}

const std::vector<SignFact>& sign_facts() {
  static const std::vector<SignFact> facts = [] {
    std::vector<SignFact> f;
    f.push_back({"t^2-5t+2 > 0", poly_desc({1, -5, 2}), frac(71, 200), +1});
    f.push_back({"t^2-6t+2 > 0", poly_desc({1, -6, 2}), frac(67, 250), +1});
    f.push_back({"t^2-7t+10 > 0", poly_desc({1, -7, 10}), frac(71, 200), +1});
    f.push_back({"t^2-7t+8 > 0", poly_desc({1, -7, 8}), frac(71, 200), +1});
    f.push_back({"end-d0-k4 cubic < 0", cubic_end_k4(), frac(129, 1000), -1});
    f.push_back({"end-d0-k4 p1 > 0", p1_end_k4(), frac(129, 1000), +1});
    f.push_back({"end-d0-k4 p4 > 0", p4_end_k4(), frac(129, 1000), +1});
    f.push_back({"mid-h3 cubic < 0", cubic_mid_h3(), frac(91, 1000), -1});
    f.push_back({"m3-head quartic > 0", quartic_m3_head(), frac(71, 200), +1});
    f.push_back({"d0-m3 quintic < 0", quintic_d0m3(), frac(91, 1000), -1});
    f.push_back({"d0-m3 pa < 0", pa_d0m3(), frac(91, 1000), -1});
    f.push_back({"d0-m3 21*pa+pb < 0", add(scale(pa_d0m3(), 21), pb_d0m3()), frac(91, 1000), -1});
    f.push_back({"d2-m3 p3 > 0", p3_d2m3(), frac(59, 1000), +1});
    f.push_back({"d2-m3 p1 > 0", p1_d2m3(), frac(59, 1000), +1});
    f.push_back({"d2-m3 26*p1+p2 > 0", add(scale(p1_d2m3(), 26), p2_d2m3()), frac(59, 1000), +1});
    // denominators of the interior formulas must not vanish below the bound
    f.push_back({"mid-h3 denom nonzero", poly_desc({1, -10, 27, -14}), frac(91, 1000), 0});
    f.push_back({"mid-h2 denom nonzero", poly_desc({1, -11, 36, -32}), frac(71, 200), 0});
    f.push_back({"m3-head denom nonzero", poly_desc({1, -14, 67, -126, 76}), frac(71, 200), 0});
    f.push_back({"d0-m3 omega num nonzero", poly_desc({1, -17, 102, -252, 216, -24}), frac(91, 1000), 0});
    f.push_back({"d0-m3 omega den nonzero", poly_desc({1, -17, 103, -261, 238, -24}), frac(91, 1000), 0});
    f.push_back({"d2-m3 w den nonzero", poly_desc({1, -24, 231, -1136, 2996, -4012, 2200, -168}),
                 frac(59, 1000), 0});
    f.push_back({"d2-m3 w' den nonzero", poly_desc({1, -15, 77, -157, 110, -8}), frac(59, 1000), 0});
    return f;
  }();
  return facts;
}

RootClaimReport verify_root_claims() {
  RootClaimReport report;
  report.all_ok = true;
  const BigRat width(1, 1000000);

  // transcription guards: the combined polynomials must equal their quoted
  // coefficient lists
  if (add(scale(p1_end_k4(), 18), p2_end_k4()).coeffs != p4_end_k4().coeffs)
    fail(Err::ClaimMismatch, "18*p1 + p2 does not match the quoted sextic");
  IntPolynomial p4_d2m3 = poly_desc(
      {26, -1014, 17370, -171824, 1085218, -4566914, 12963122, -24547504, 29894064, -21678744,
       7950088, -958288, 34944});
  if (add(scale(p1_d2m3(), 26), p2_d2m3()).coeffs != p4_d2m3.coeffs)
    fail(Err::ClaimMismatch, "26*p1 + p2 does not match the quoted degree-12 polynomial");
  IntPolynomial comb_d0m3 = poly_desc(
      {21, -588, 6848, -42928, 156427, -333056, 392628, -221000, 38800, -2016});
  if (add(scale(pa_d0m3(), 21), pb_d0m3()).coeffs != comb_d0m3.coeffs)
    fail(Err::ClaimMismatch, "21*pa + pb does not match the quoted degree-9 polynomial");

  for (const auto& claim : root_claims()) {
    RootClaimResult res;
    res.id = claim.id;
    res.quoted = claim.quoted;
    auto in_unit = sturm_isolate(claim.poly, 0, 1, width);
    BigRat bound = root_bound(claim.poly);
    auto all = sturm_isolate(claim.poly, -bound, bound, BigRat(1, 1024));
    res.smallest_real = all.empty() ? NAN : all.front().mid_double();
    if (in_unit.empty()) {
      res.lo = res.hi = NAN;
      res.matched = false;
    } else {
      res.lo = in_unit.front().lo.convert_to<double>();
      res.hi = in_unit.front().hi.convert_to<double>();
      // the bracket must sit inside (quoted - 0.001, quoted + 0.001)
      res.matched = in_unit.front().lo > BigRat(claim.quoted) - frac(1, 1000) &&
                    in_unit.front().hi < BigRat(claim.quoted) + frac(1, 1000);
    }
    if (!res.matched) report.all_ok = false;
    report.claims.push_back(res);
  }

  for (const auto& fact : sign_facts()) {
    SignFactResult res;
    res.id = fact.id;
    res.interval = "(0, " + fact.upper.str() + "]";
    res.expected_sign = fact.expected_sign;
    int roots = sturm_count(fact.poly, 0, fact.upper);
    bool no_roots = roots == 0 && eval(fact.poly, fact.upper) != 0;
    if (fact.expected_sign == 0) {
      res.holds = no_roots;
    } else {
      res.holds = no_roots && sign_of(eval(fact.poly, fact.upper)) == fact.expected_sign;
    }
    if (!res.holds) report.all_ok = false;
    report.facts.push_back(res);
  }
  return report;
}

}  // namespace specgap
