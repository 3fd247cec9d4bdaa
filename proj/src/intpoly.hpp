#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace specgap {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Integer-coefficient univariate polynomial, ascending degree, trailing
// zeros trimmed; the zero polynomial has an empty coefficient list.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return int(coeffs.size()) - 1; }
  const BigInt& leading() const { return coeffs.back(); }
};

// coefficients given from the highest degree down, as written in formulas
IntPolynomial poly_desc(std::initializer_list<long long> desc);
IntPolynomial poly_desc(const std::vector<BigInt>& desc);

IntPolynomial trim(std::vector<BigInt> coeffs);
IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial scale(const IntPolynomial& a, const BigInt& c);
IntPolynomial derivative(const IntPolynomial& a);

BigRat eval(const IntPolynomial& a, const BigRat& t);
double eval_double(const IntPolynomial& a, double t);

// content-free (primitive) part with positive leading coefficient
IntPolynomial primitive_part(const IntPolynomial& a);

// exact euclidean remainder up to a positive rational factor: returns the
// primitive part of rem(a, b); used by the Sturm chain
IntPolynomial pseudo_remainder_primitive(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial gcd_poly(const IntPolynomial& a, const IntPolynomial& b);

// a / gcd(a, a'): same real roots, all simple
IntPolynomial squarefree_part(const IntPolynomial& a);

// exact division, requires b | a
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

std::string to_string(const IntPolynomial& a);

}  // namespace specgap
