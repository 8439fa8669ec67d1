// SPDX-License-Identifier: Apache-2.0
//
// Exact rational polynomials and the P(z)/(1-z)^d fractions used by the
// operator-calculus closed forms. Everything here is exact mpq arithmetic.

#pragma once

#include <vector>

#include "abelzeta/exact.hpp"

namespace abelzeta {

// Coefficients in ascending degree; trailing zeros are normalized away.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs);

  static ExactPoly constant(const ExactRational& c);
  static ExactPoly monomial(const ExactRational& c, size_t degree);

  const std::vector<ExactRational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const;  // -1 for the zero polynomial

  ExactPoly derivative() const;
  ExactRational eval(const ExactRational& z) const;
  // k-th derivative evaluated at z = 1, via falling factorials.
  ExactRational derivative_at_one(unsigned long k) const;

  ExactPoly mul_by_one_minus_z() const;  // (1-z) * p(z)
  ExactPoly mul_by_z() const;
  friend ExactPoly add(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly scale(const ExactPoly& a, const ExactRational& c);

 private:
  void normalize();
  std::vector<ExactRational> coeffs_;
};

// num(z) / (1-z)^denom_pow, closed under the operator z * d/dz.
struct PolyFraction {
  ExactPoly num;
  unsigned long denom_pow = 0;

  // z d/dz [ N/(1-z)^d ] = z (N' (1-z) + d N) / (1-z)^{d+1}
  PolyFraction apply_z_ddz() const;
  // Exact value at a rational z != 1.
  ExactRational eval(const ExactRational& z) const;
};

// (z d/dz)^n applied to 1/(1-z): the exact closed form of sum_{k>=1} k^n z^k.
PolyFraction power_sum_fraction(unsigned long n);

}  // namespace abelzeta
