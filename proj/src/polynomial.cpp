// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelzeta {

ExactPoly::ExactPoly(std::vector<ExactRational> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

ExactPoly ExactPoly::constant(const ExactRational& c) {
  return ExactPoly({c});
}

ExactPoly ExactPoly::monomial(const ExactRational& c, size_t degree) {
  std::vector<ExactRational> v(degree + 1, ExactRational(0));
  v[degree] = c;
  return ExactPoly(std::move(v));
}

long ExactPoly::degree() const {
  return static_cast<long>(coeffs_.size()) - 1;
}

void ExactPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ExactPoly ExactPoly::derivative() const {
  if (coeffs_.size() <= 1) return ExactPoly();
  std::vector<ExactRational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * ExactRational(static_cast<long>(i));
  return ExactPoly(std::move(d));
}

ExactRational ExactPoly::eval(const ExactRational& z) const {
  ExactRational acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

ExactRational ExactPoly::derivative_at_one(unsigned long k) const {
  ExactRational acc = 0;
  for (size_t i = k; i < coeffs_.size(); ++i)
    acc += coeffs_[i] * ExactRational(falling_factorial(i, k));
  return acc;
}

ExactPoly ExactPoly::mul_by_one_minus_z() const {
  if (is_zero()) return ExactPoly();
  std::vector<ExactRational> r(coeffs_.size() + 1, ExactRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    r[i] += coeffs_[i];
    r[i + 1] -= coeffs_[i];
  }
  return ExactPoly(std::move(r));
}

ExactPoly ExactPoly::mul_by_z() const {
  if (is_zero()) return ExactPoly();
  std::vector<ExactRational> r(coeffs_.size() + 1, ExactRational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i + 1] = coeffs_[i];
  return ExactPoly(std::move(r));
}

ExactPoly add(const ExactPoly& a, const ExactPoly& b) {
  std::vector<ExactRational> r(std::max(a.coeffs_.size(), b.coeffs_.size()),
                               ExactRational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return ExactPoly(std::move(r));
}

ExactPoly scale(const ExactPoly& a, const ExactRational& c) {
  std::vector<ExactRational> r = a.coeffs_;
  for (auto& x : r) x *= c;
  return ExactPoly(std::move(r));
}

PolyFraction PolyFraction::apply_z_ddz() const {
  ExactPoly inner = add(num.derivative().mul_by_one_minus_z(),
                        scale(num, ExactRational(static_cast<long>(denom_pow))));
  return PolyFraction{inner.mul_by_z(), denom_pow + 1};
}

ExactRational PolyFraction::eval(const ExactRational& z) const {
  if (z == 1) throw std::invalid_argument("PolyFraction::eval: pole at z = 1");
  ExactRational one_minus = ExactRational(1) - z;
  ExactInt num_pow, den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), one_minus.get_num().get_mpz_t(), denom_pow);
  mpz_pow_ui(den_pow.get_mpz_t(), one_minus.get_den().get_mpz_t(), denom_pow);
  ExactRational denom(num_pow, den_pow);
  denom.canonicalize();
  return num.eval(z) / denom;
}

PolyFraction power_sum_fraction(unsigned long n) {
  PolyFraction f{ExactPoly::constant(ExactRational(1)), 1};
  for (unsigned long i = 0; i < n; ++i) f = f.apply_z_ddz();
  return f;
}

}  // namespace abelzeta
