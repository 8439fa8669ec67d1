// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/abel.hpp"

#include <stdexcept>

#include "abelzeta/specfun.hpp"

namespace abelzeta {

Summed certified_sum(const std::function<Ball(long, const Precision&)>& term,
                     const std::function<Mag(long)>& tail_bound,
                     const Precision& p, const Mag& eps, long term_cap,
                     const char* who) {
  const Mag half_eps = eps.mul_2si(-1);
  Ball sum = Ball::zero(p);
  long n = 0;
  for (;;) {
    Mag tb = tail_bound(n);
    if (tb.leq(half_eps)) return Summed{inflate(sum, tb), n};
    if (n >= term_cap)
      throw ConvergenceFailure(
          std::string(who) + ": tail bound did not reach eps/2 within " +
              std::to_string(term_cap) + " terms",
          inflate(sum, tb));
    sum = add(sum, term(n, p), p);
    ++n;
  }
}

Summed abel_rhs_sum(const SequenceSpec& seq, long M, const Precision& p,
                    const Mag& eps, long term_cap) {
  if (M < 1) throw std::invalid_argument("abel_rhs_sum: M >= 1 required");
  validate(p);
  auto term = [&](long n, const Precision& pp) {
    Ball d = seq.defect ? seq.defect(n + M - 1, pp)
                        : sub(seq.limit, seq.term(n + M - 1, pp), pp);
    ExactInt w = rising_factorial(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(M - 1));
    return mul(Ball::from_int(w, pp), d, pp);
  };
  return certified_sum(term, seq.tail_bound, p, eps, term_cap, "abel_rhs_sum");
}

Summed dirichlet_tail_sum(const DirichletSpec& spec, const Precision& p,
                          const Mag& eps, long term_cap) {
  validate(p);
  auto term = [&](long n, const Precision& pp) {
    return mul(spec.a_seq(n, pp), spec.L_minus_one(n + spec.sigma + 1, pp), pp);
  };
  return certified_sum(term, spec.tail_bound, p, eps, term_cap,
                       "dirichlet_tail_sum");
}

LemmaCheck lemma21_check(const ExactPoly& poly, long M) {
  if (M < 1) throw std::invalid_argument("lemma21_check: M >= 1 required");
  LemmaCheck r;
  r.lhs = poly.mul_by_one_minus_z().derivative_at_one(
      static_cast<unsigned long>(M));
  r.rhs = ExactRational(-M) *
          poly.derivative_at_one(static_cast<unsigned long>(M - 1));
  r.equal = (r.lhs == r.rhs);
  return r;
}

Ball derivative_limit_psi_power(long l, long M, long e, const Precision& p) {
  if (l < 0 || M < 1 || e < 0)
    throw std::invalid_argument(
        "derivative_limit_psi_power: need l >= 0, M >= 1, e >= 0");
  validate(p);
  const long jmax = std::min(M - 1, e);
  Ball acc = Ball::zero(p);
  for (long j = 0; j <= jmax; ++j) {
    ExactInt c = binomial(static_cast<unsigned long>(M - 1),
                          static_cast<unsigned long>(j)) *
                 falling_factorial(static_cast<unsigned long>(e),
                                   static_cast<unsigned long>(j));
    if ((M - 1 - j) % 2 != 0) c = -c;  // (-1)^{M-1-j}
    acc = add(acc,
              mul(Ball::from_int(c, p), polygamma_at_one(l + M - 1 - j, p), p),
              p);
  }
  return mul(Ball::from_long(-M, p), acc, p);
}

}  // namespace abelzeta
