// SPDX-License-Identifier: Apache-2.0
//
// Exact unbounded integers and rationals (GMP-backed). mpq_class keeps
// den > 0 and gcd(num, den) = 1 canonical form after every operation.

#pragma once

#include <string>

#include <gmpxx.h>

namespace abelzeta {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

inline ExactInt factorial(unsigned long n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline ExactInt binomial(unsigned long n, unsigned long k) {
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// e! / (e-j)!, the j-th falling factorial of e; zero for j > e.
inline ExactInt falling_factorial(unsigned long e, unsigned long j) {
  if (j > e) return 0;
  ExactInt r = 1;
  for (unsigned long i = e - j + 1; i <= e; ++i) r *= i;
  return r;
}

inline ExactRational make_rational(long num, long den) {
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p/q", plain integers, and decimal literals like "0.25"; the
// result is exact.
ExactRational parse_rational(const std::string& s);

}  // namespace abelzeta
