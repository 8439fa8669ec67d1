// SPDX-License-Identifier: Apache-2.0
//
// Abel-summation machinery: the shifted-factorial-weighted defect sums, the
// exact derivative-limit lemma check on polynomials, the closed Leibniz form
// of the derivative limit at z -> 1, and the generic Dirichlet-tail sum.

#pragma once

#include <functional>

#include "abelzeta/ball.hpp"
#include "abelzeta/exact.hpp"
#include "abelzeta/polynomial.hpp"

namespace abelzeta {

// A sequence alpha_n with known limit alpha and a certified tail bound.
// tail_bound(N) must bound sum_{n>=N} |(n+1)_{M-1} (alpha - alpha_{n+M-1})|
// for the M this spec will be summed with, be non-increasing in N, and tend
// to zero. `defect`, when set, evaluates alpha - alpha_n directly and is
// preferred over forming limit - term(n) (it lets zeta families route
// through the cancellation-free zeta-1 primitive).
struct SequenceSpec {
  std::function<Ball(long n, const Precision&)> term;
  Ball limit;
  std::function<Mag(long N)> tail_bound;
  std::function<Ball(long n, const Precision&)> defect;
};

// sum_{n>=0} a_n (L(n+sigma+1) - 1) with the same truncation contract.
struct DirichletSpec {
  std::function<Ball(long n, const Precision&)> a_seq;
  std::function<Ball(long s, const Precision&)> L_minus_one;
  long sigma = 1;
  std::function<Mag(long N)> tail_bound;
};

struct Summed {
  Ball value;
  long terms = 0;
};

inline constexpr long kDefaultTermCap = 1000000;

// Certified summation workhorse: adds term(n) for n = 0, 1, 2, ... until
// tail_bound(n) <= eps/2 and folds that tail into the radius. Terms are
// requested strictly in order, so evaluators may keep incremental state.
Summed certified_sum(const std::function<Ball(long, const Precision&)>& term,
                     const std::function<Mag(long)>& tail_bound,
                     const Precision& p, const Mag& eps, long term_cap,
                     const char* who);

// sum_{n>=0} (n+1)_{M-1} (alpha - alpha_{n+M-1}); terms are added until
// tail_bound(N) <= eps/2, and that tail is folded into the radius. Throws
// ConvergenceFailure (carrying the best ball) if the cap is hit first.
Summed abel_rhs_sum(const SequenceSpec& seq, long M, const Precision& p,
                    const Mag& eps, long term_cap = kDefaultTermCap);

Summed dirichlet_tail_sum(const DirichletSpec& spec, const Precision& p,
                          const Mag& eps, long term_cap = kDefaultTermCap);

// Exact check of the derivative-limit lemma on a polynomial:
// d^M/dz^M [(1-z) p(z)] at z=1 against -M p^{(M-1)}(1), both in exact
// rational arithmetic.
struct LemmaCheck {
  ExactRational lhs;
  ExactRational rhs;
  bool equal = false;
};

LemmaCheck lemma21_check(const ExactPoly& poly, long M);

// lim_{z->1^-} d^M/dz^M [(1-z) psi^{(l)}(2-z) z^e] by the closed Leibniz
// form -M sum_{j=0}^{min(M-1,e)} C(M-1,j) (-1)^{M-1-j} psi^{(l+M-1-j)}(1)
// e!/(e-j)!; the power factor is zero past j = e.
Ball derivative_limit_psi_power(long l, long M, long e, const Precision& p);

}  // namespace abelzeta
