// SPDX-License-Identifier: Apache-2.0
//
// Shared test oracles. Everything here is independent of the library's own
// evaluation paths: MPFR's zeta/euler constants, brute-force enumeration,
// exact-rational partial sums, finite differences.

#pragma once

#include <functional>
#include <vector>

#include "abelzeta/ball.hpp"
#include "abelzeta/exact.hpp"
#include "abelzeta/specfun.hpp"

namespace testsupport {

using namespace abelzeta;

inline Precision P(long bits) { return Precision{bits, 16}; }

// Visits every set partition of {0..n-1} (restricted growth strings),
// reporting its block count.
inline void visit_partitions(unsigned n,
                             const std::function<void(unsigned)>& visit) {
  if (n == 0) {
    visit(0);
    return;
  }
  std::vector<unsigned> rgs(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned mx) {
    if (i == n) {
      visit(mx + 1);
      return;
    }
    for (unsigned b = 0; b <= mx + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(mx, b));
    }
  };
  rec(1, 0);  // rgs[0] = 0 always
}

inline unsigned long count_partitions(unsigned n, unsigned k) {
  unsigned long count = 0;
  visit_partitions(n, [&](unsigned blocks) {
    if (blocks == k) ++count;
  });
  return count;
}

inline unsigned long bell_number(unsigned n) {
  unsigned long count = 0;
  visit_partitions(n, [&](unsigned) { ++count; });
  return count;
}

// MPFR's own zeta (an implementation entirely separate from the library):
// correctly rounded, so a half-ulp ball contains the true value.
inline Ball zeta_oracle(unsigned long s, long bits) {
  Real m(bits);
  int t = mpfr_zeta_ui(m.raw(), s, MPFR_RNDN);
  Mag r = Mag::round_err(m.raw(), t);
  return Ball::from_midrad(std::move(m), r);
}

inline Ball euler_oracle(long bits) {
  Real m(bits);
  int t = mpfr_const_euler(m.raw(), MPFR_RNDN);
  Mag r = Mag::round_err(m.raw(), t);
  return Ball::from_midrad(std::move(m), r);
}

// Euler's constant from the limit definition H_N - ln N accelerated by
// Euler-Maclaurin: gamma = H_N - ln N - 1/(2N) + sum_j B_{2j}/(2j N^{2j}),
// remainder enveloped by the first omitted term.
inline Ball gamma_limit_oracle(long bits) {
  const long N = 64, J = 40;
  const Precision p{bits, 16};
  ExactRational harmonic = 0;
  for (long j = 1; j <= N; ++j) harmonic += make_rational(1, j);
  Ball acc = Ball::from_rational(harmonic, p);

  Real ln_n(p.work());
  mpfr_set_ui(ln_n.raw(), static_cast<unsigned long>(N), MPFR_RNDN);
  int t = mpfr_log(ln_n.raw(), ln_n.raw(), MPFR_RNDN);
  Ball ln_ball = Ball::from_midrad(ln_n, Mag::round_err(ln_n.raw(), t));
  acc = sub(acc, ln_ball, p);
  acc = sub(acc, Ball::from_rational(make_rational(1, 2 * N), p), p);

  ExactRational n2j = 1;
  for (long j = 1; j <= J; ++j) {
    n2j *= ExactRational(N * N);
    ExactRational term = bernoulli(static_cast<unsigned long>(2 * j)) /
                         (ExactRational(2 * j) * n2j);
    acc = add(acc, Ball::from_rational(term, p), p);
  }
  ExactRational rem = bernoulli(static_cast<unsigned long>(2 * J + 2)) /
                      (ExactRational(2 * J + 2) * n2j * ExactRational(N * N));
  return inflate(acc, Mag::from_mpq_abs(rem));
}

// Derivative limit of F(z) = (1-z) psi^{(l)}(2-z) z^e at z -> 1^- by an
// M-th order finite difference with step 2^-34 at 512-bit precision.
// Approximation error is far below 1e-4, enough to discriminate any of the
// candidate closed forms (their differences are O(1)).
inline Ball derivative_limit_fd(long l, long M, long e) {
  const Precision p{512, 16};
  const ExactRational h = make_rational(1, 1L << 34);
  Ball acc = Ball::zero(p);
  for (long i = 0; i <= M; ++i) {
    ExactRational zi = 1 - ExactRational(i) * h;
    Ball F = mul(Ball::from_rational(ExactRational(i) * h, p),  // (1 - zi)
                 polygamma(l, Ball::from_rational(2 - zi, p), p), p);
    ExactInt zi_num, zi_den;
    mpz_pow_ui(zi_num.get_mpz_t(), zi.get_num().get_mpz_t(),
               static_cast<unsigned long>(e));
    mpz_pow_ui(zi_den.get_mpz_t(), zi.get_den().get_mpz_t(),
               static_cast<unsigned long>(e));
    ExactRational zpow(zi_num, zi_den);
    zpow.canonicalize();
    F = mul(F, Ball::from_rational(zpow, p), p);
    ExactInt c = binomial(static_cast<unsigned long>(M),
                          static_cast<unsigned long>(i));
    if ((M - i) % 2 != 0) c = -c;
    acc = add(acc, mul(Ball::from_int(c, p), F, p), p);
  }
  ExactInt hM_num, hM_den;
  mpz_pow_ui(hM_num.get_mpz_t(), h.get_num().get_mpz_t(),
             static_cast<unsigned long>(M));
  mpz_pow_ui(hM_den.get_mpz_t(), h.get_den().get_mpz_t(),
             static_cast<unsigned long>(M));
  ExactRational hM(hM_num, hM_den);
  hM.canonicalize();
  if (M % 2 != 0) hM = -hM;  // (-h)^M
  return div(acc, Ball::from_rational(hM, p), p);
}

// |a.mid - b.mid| <= tol, decided in mpfr at combined precision.
inline bool mids_within(const Ball& a, const Ball& b, double tol) {
  Real d(std::max(a.mid().prec(), b.mid().prec()) + 32);
  mpfr_sub(d.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDA);
  mpfr_abs(d.raw(), d.raw(), MPFR_RNDU);
  return mpfr_cmp_d(d.raw(), tol) <= 0;
}

}  // namespace testsupport
