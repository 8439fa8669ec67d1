// SPDX-License-Identifier: Apache-2.0
//
// Rigorous evaluators for the special functions and exact combinatorial
// quantities the identity suite is built from. All ball-valued results obey
// the kernel containment contract; all summation cutoffs are closed with
// certified tail bounds folded into the radius.

#pragma once

#include "abelzeta/ball.hpp"
#include "abelzeta/exact.hpp"

namespace abelzeta {

// zeta(s) - 1 = sum_{n>=2} n^{-s} for integer s >= 2. The primitive form:
// every term is summed directly (no cancellation against the leading 1), so
// the result is accurate relative to its own 2^{-s} scale. Cached per
// (s, working precision).
Ball zeta_minus_one(long s, const Precision& p);

// zeta(s) = 1 + zeta_minus_one(s), cross-checked on first evaluation against
// an independently parameterized Euler-Maclaurin evaluation; a containment
// mismatch between the two routes throws std::logic_error.
Ball zeta_int(long s, const Precision& p);

// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} for integer s >= 2 and a ball
// a contained in (0, 4]. Throws DomainError for a touching 0 or above 4.
Ball hurwitz_zeta(long s, const Ball& a, const Precision& p);

// Polygamma psi^{(m)}(x) for m >= 0 and a ball x contained in (0, 4].
// m = 0 uses the zeta-coefficient Taylor series around 1 with argument
// reduction by the recurrence psi(x+1) = psi(x) + 1/x; m >= 1 uses
// psi^{(m)}(x) = (-1)^{m+1} m! zeta(m+1, x).
Ball polygamma(long m, const Ball& x, const Precision& p);

// psi^{(m)}(1): -gamma for m = 0, (-1)^{m+1} m! zeta(m+1) otherwise. Cached.
Ball polygamma_at_one(long m, const Precision& p);

// Euler's constant via gamma = 1 - sum_{k>=2} (zeta(k)-1)/k with a
// geometric tail bound. Cached per working precision.
Ball euler_gamma(const Precision& p);

// Stirling numbers of the second kind; S(0,0) = 1, zero for k > n or for
// k = 0 < n. Memoized.
ExactInt stirling2(unsigned long n, unsigned long k);

// (n+1)_M = (n+1)(n+2)...(n+M); empty product for M = 0.
ExactInt rising_factorial(unsigned long n, unsigned long M);

// Bernoulli numbers with the B_1 = -1/2 convention. Memoized.
ExactRational bernoulli(unsigned long n);

// Upper bound 2^{-s} (1 + 2/(s-1)) on zeta(s)-1, used by tail certificates.
Mag zeta_minus_one_ub(long s);

namespace detail {

// The independent zeta route: Euler-Maclaurin from a different cutoff and
// correction order than the primitive path. Exposed for cross-check tests.
Ball zeta_euler_maclaurin(long s, const Precision& p);

// sum_{m>=0} (x0+m)^{-s} by Euler-Maclaurin about x0 > 0 with J correction
// terms and the rigorous periodic-Bernoulli remainder
// |R| <= 4 (s)_{2J} / ((2pi)^{2J+1} x0^{s+2J}) folded into the radius.
Ball hurwitz_tail_from(long s, const Ball& x0, long J, const Precision& p);

long em_order(long work_bits);

}  // namespace detail

}  // namespace abelzeta
