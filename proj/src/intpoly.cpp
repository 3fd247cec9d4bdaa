#include "intpoly.hpp"

#include <algorithm>

#include "errors.hpp"

namespace specgap {

IntPolynomial trim(std::vector<BigInt> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return IntPolynomial{std::move(coeffs)};
}

IntPolynomial poly_desc(std::initializer_list<long long> desc) {
  std::vector<BigInt> c;
  for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) c.emplace_back(*it);
  return trim(std::move(c));
}

IntPolynomial poly_desc(const std::vector<BigInt>& desc) {
  std::vector<BigInt> c(desc.rbegin(), desc.rend());
  return trim(std::move(c));
}

IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return trim(std::move(c));
}

IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return trim(std::move(c));
}

IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return trim(std::move(c));
}

IntPolynomial scale(const IntPolynomial& a, const BigInt& c) {
  if (c == 0) return {};
  std::vector<BigInt> out = a.coeffs;
  for (auto& x : out) x *= c;
  return trim(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<BigInt> c(a.coeffs.size() - 1);
  for (size_t i = 1; i < a.coeffs.size(); ++i) c[i - 1] = a.coeffs[i] * BigInt(i);
  return trim(std::move(c));
}

BigRat eval(const IntPolynomial& a, const BigRat& t) {
  BigRat v = 0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) v = v * t + BigRat(*it);
  return v;
}

double eval_double(const IntPolynomial& a, double t) {
  double v = 0.0;
  for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it)
    v = v * t + it->convert_to<double>();
  return v;
}

IntPolynomial primitive_part(const IntPolynomial& a) {
  if (a.is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : a.coeffs) g = boost::multiprecision::gcd(g, c);
  std::vector<BigInt> out = a.coeffs;
  for (auto& x : out) x /= g;
  if (out.back() < 0)
    for (auto& x : out) x = -x;
  return IntPolynomial{std::move(out)};
}

IntPolynomial pseudo_remainder_primitive(const IntPolynomial& a, const IntPolynomial& b) {
  // equals rem(a, b) up to a positive rational factor; content-reduced with
  // the sign kept intact (sign preservation is what Sturm chains rely on)
  if (b.is_zero()) fail(Err::InvalidArgument, "division by the zero polynomial");
  IntPolynomial r = a;
  BigInt alead = boost::multiprecision::abs(b.leading());
  BigInt slead = b.leading() < 0 ? BigInt(-1) : BigInt(1);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    BigInt c = r.leading() * slead;
    // r <- |lead|*r - sgn(lead)*c_r * x^shift * b, degree strictly drops
    std::vector<BigInt> next(r.coeffs.size(), 0);
    for (size_t i = 0; i < r.coeffs.size(); ++i) next[i] = r.coeffs[i] * alead;
    for (size_t i = 0; i < b.coeffs.size(); ++i) next[i + shift] -= c * b.coeffs[i];
    r = trim(std::move(next));
  }
  if (r.is_zero()) return {};
  BigInt g = 0;
  for (const auto& c : r.coeffs) g = boost::multiprecision::gcd(g, c);
  for (auto& c : r.coeffs) c /= g;
  return r;
}

IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a), y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

namespace {

// long division over rationals, exactness checked
bool try_divide(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial& out) {
  std::vector<BigRat> r(a.coeffs.size());
  for (size_t i = 0; i < a.coeffs.size(); ++i) r[i] = BigRat(a.coeffs[i]);
  int db = b.degree();
  std::vector<BigRat> q(std::max<int>(0, a.degree() - db + 1), BigRat(0));
  for (int d = a.degree(); d >= db; --d) {
    BigRat c = r[d] / BigRat(b.leading());
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) r[d - db + i] -= c * BigRat(b.coeffs[i]);
  }
  for (const auto& x : r)
    if (x != 0) return false;
  std::vector<BigInt> qi(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    if (boost::multiprecision::denominator(q[i]) != 1) return false;
    qi[i] = boost::multiprecision::numerator(q[i]);
  }
  out = trim(std::move(qi));
  return true;
}

}  // namespace

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial q;
  if (!try_divide(a, b, q)) fail(Err::InvalidArgument, "inexact polynomial division");
  return q;
}

IntPolynomial squarefree_part(const IntPolynomial& a) {
  if (a.degree() <= 1) return primitive_part(a);
  IntPolynomial g = gcd_poly(a, derivative(a));
  if (g.degree() == 0) return primitive_part(a);
  // divide the primitive part; a scalar mismatch cannot occur afterwards
  return primitive_part(divide_exact(scale(primitive_part(a), g.leading()), g));
}

std::string to_string(const IntPolynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int d = a.degree(); d >= 0; --d) {
    const BigInt& c = a.coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    bool unit = abs_c == 1 && d > 0;
    if (!unit) out += abs_c.str();
    if (d > 0) out += "t";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

}  // namespace specgap
