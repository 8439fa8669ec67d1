// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abelzeta/abel.hpp"
#include "abelzeta/identities.hpp"
#include "test_support.hpp"

using namespace abelzeta;
using namespace testsupport;

namespace {

// Reuse the zeta family spec the identity layer is built on.
SequenceSpec zeta_family(long M) {
  SequenceSpec s;
  s.term = [](long n, const Precision& p) { return zeta_int(n + 2, p); };
  s.limit = Ball::from_long(1, Precision{32, 0});
  s.defect = [](long n, const Precision& p) {
    return neg(zeta_minus_one(n + 2, p));
  };
  s.tail_bound = [M](long N) {
    Mag t = Mag::mul(Mag::from_mpz_abs(rising_factorial(
                         static_cast<unsigned long>(N),
                         static_cast<unsigned long>(M - 1))),
                     zeta_minus_one_ub(N + M + 1));
    Mag q = Mag::div_ub_lb(
        Mag::from_ui(static_cast<unsigned long>(N + M)),
        Mag::from_ui(static_cast<unsigned long>(N + 1)).mul_2si(1));
    if (!(q.to_double() < 1.0)) return Mag::inf();
    return Mag::div_ub_lb(t, Mag::sub_lb(Mag::from_ui(1), q));
  };
  return s;
}

}  // namespace

TEST_CASE("polynomial calculus") {
  ExactPoly p({make_rational(1, 2), make_rational(-3, 1), make_rational(2, 1)});
  CHECK(p.degree() == 2);
  CHECK(p.eval(ExactRational(2)) == make_rational(1, 2) - 6 + 8);
  CHECK(p.derivative().eval(ExactRational(1)) == p.derivative_at_one(1));
  CHECK(p.derivative_at_one(0) == p.eval(ExactRational(1)));
  ExactPoly q = p.mul_by_one_minus_z();
  CHECK(q.eval(make_rational(1, 3)) ==
        p.eval(make_rational(1, 3)) * make_rational(2, 3));
  CHECK(ExactPoly({ExactRational(0)}).is_zero());
}

TEST_CASE("lemma check on hand-computable polynomials") {
  LemmaCheck a = lemma21_check(ExactPoly::constant(ExactRational(1)), 1);
  CHECK(a.equal);
  CHECK(a.lhs == -1);
  CHECK(a.rhs == -1);

  LemmaCheck b = lemma21_check(ExactPoly::monomial(ExactRational(1), 1), 1);
  CHECK(b.equal);
  CHECK(b.lhs == -1);

  // d^2/dz^2 (z^2 - z^3) at 1 = 2 - 6 = -4; -2 p'(1) = -4
  LemmaCheck c = lemma21_check(ExactPoly::monomial(ExactRational(1), 2), 2);
  CHECK(c.equal);
  CHECK(c.lhs == -4);
  CHECK(c.rhs == -4);
}

TEST_CASE("lemma property over 1000 seeded random polynomials") {
  LemmaBatch batch = run_lemma_batch(1000, 0);
  CHECK(batch.checks > 1000);
  CHECK(batch.equal == batch.checks);
}

TEST_CASE("abel sum of a constant sequence is exactly zero") {
  SequenceSpec s;
  s.term = [](long, const Precision& p) { return Ball::from_long(7, p); };
  s.limit = Ball::from_long(7, Precision{32, 0});
  s.tail_bound = [](long) { return Mag::zero(); };
  Summed r = abel_rhs_sum(s, 1, P(128), Mag::parse("1e-20"));
  CHECK(r.terms == 0);
  CHECK(r.value.contains(ExactRational(0)));
}

TEST_CASE("abel sum reproduces the classical value -1 at M = 1") {
  Summed r = abel_rhs_sum(zeta_family(1), 1, P(256), Mag::parse("1e-45"));
  CHECK(r.value.contains(ExactRational(-1)));
  CHECK(r.value.rad().leq(Mag::parse("1e-45")));
}

TEST_CASE("abel sum at M = 2 equals 1 - zeta(2) (telescoping oracle)") {
  // The oracle identity: partial fractions telescope exactly, so
  // sum_{n=2}^{N} (2n-1)/(n (n-1)^2) == 1 - 1/N + sum_{m=1}^{N-1} m^{-2}.
  for (long N : {5L, 17L, 40L}) {
    ExactRational lhs = 0;
    for (long n = 2; n <= N; ++n)
      lhs += ExactRational(2 * n - 1) /
             (ExactRational(n) * ExactRational((n - 1) * (n - 1)));
    ExactRational rhs = 1 - make_rational(1, N);
    for (long m = 1; m < N; ++m) rhs += make_rational(1, m * m);
    REQUIRE(lhs == rhs);
  }
  // Hence sum_k k (zeta(k)-1) = 1 + zeta(2) and the M = 2 sum is 1 - zeta(2).
  Summed r = abel_rhs_sum(zeta_family(2), 2, P(256), Mag::parse("1e-45"));
  Ball expect = sub(Ball::one(P(256)), zeta_oracle(2, 300), P(256));
  CHECK(overlaps(r.value, expect));
}

TEST_CASE("tail honesty: more terms keep the ball inside the original") {
  Summed coarse = abel_rhs_sum(zeta_family(2), 2, P(256), Mag::parse("1e-20"));
  Summed fine = abel_rhs_sum(zeta_family(2), 2, P(256), Mag::parse("1e-44"));
  CHECK(fine.terms > coarse.terms);
  CHECK(fine.value.rad().cmp(coarse.value.rad()) < 0);
  CHECK(overlaps(fine.value, coarse.value));
}

TEST_CASE("term cap produces a convergence failure carrying the best ball") {
  try {
    abel_rhs_sum(zeta_family(1), 1, P(128), Mag::parse("1e-30"), 3);
    FAIL("expected ConvergenceFailure");
  } catch (const ConvergenceFailure& e) {
    CHECK(e.best().contains(ExactRational(-1)));  // fat but still correct
    CHECK(!e.best().rad().leq(Mag::parse("1e-30")));
  }
}

TEST_CASE("derivative limit closed form: single-term cases") {
  const Precision p = P(192);
  Ball a = derivative_limit_psi_power(1, 1, 2, p);
  CHECK(overlaps(a, neg(zeta_int(2, p))));

  for (long l : {0L, 2L, 3L}) {
    Ball b = derivative_limit_psi_power(l, 1, 0, p);
    CHECK(overlaps(b, neg(polygamma_at_one(l, p))));
  }
}

TEST_CASE("derivative limit closed form matches finite differences") {
  const Precision p = P(256);
  struct Probe {
    long l, M, e;
  };
  for (const Probe& probe : {Probe{1, 2, 2}, Probe{1, 2, 0}, Probe{2, 3, 3},
                             Probe{1, 3, 1}}) {
    Ball closed = derivative_limit_psi_power(probe.l, probe.M, probe.e, p);
    Ball fd = derivative_limit_fd(probe.l, probe.M, probe.e);
    REQUIRE(mids_within(closed, fd, 1e-4));
  }
  // the l=1, M=2, e=2 value is -2 (2 zeta(3) + 2 zeta(2))
  Ball closed = derivative_limit_psi_power(1, 2, 2, p);
  Ball expect = mul(Ball::from_long(-4, p),
                    add(zeta_int(3, p), zeta_int(2, p), p), p);
  CHECK(overlaps(closed, expect));
}

TEST_CASE("power factor convention: terms past e contribute exactly nothing") {
  const Precision p = P(192);
  const long l = 1, M = 3, e = 1;  // binomial range goes to j=2, e caps at 1
  Ball capped = derivative_limit_psi_power(l, M, e, p);
  // same assembly with the zero factors materialized
  Ball acc = Ball::zero(p);
  for (long j = 0; j <= M - 1; ++j) {
    ExactInt c = binomial(static_cast<unsigned long>(M - 1),
                          static_cast<unsigned long>(j)) *
                 falling_factorial(static_cast<unsigned long>(e),
                                   static_cast<unsigned long>(j));
    if ((M - 1 - j) % 2 != 0) c = -c;
    acc = add(acc, mul(Ball::from_int(c, p), polygamma_at_one(l + M - 1 - j, p),
                       p),
              p);
  }
  Ball full = mul(Ball::from_long(-M, p), acc, p);
  CHECK(identical(capped, full));
}

TEST_CASE("dirichlet tail sums") {
  const Precision p = P(256);
  const Mag eps = Mag::parse("1e-42");

  DirichletSpec zero_seq;
  zero_seq.sigma = 1;
  zero_seq.a_seq = [](long, const Precision& pp) { return Ball::zero(pp); };
  zero_seq.L_minus_one = [](long s, const Precision& pp) {
    return zeta_minus_one(s, pp);
  };
  zero_seq.tail_bound = [](long) { return Mag::zero(); };
  CHECK(dirichlet_tail_sum(zero_seq, p, eps).value.contains(ExactRational(0)));

  DirichletSpec ones;
  ones.sigma = 1;
  ones.a_seq = [](long, const Precision& pp) { return Ball::one(pp); };
  ones.L_minus_one = [](long s, const Precision& pp) {
    return zeta_minus_one(s, pp);
  };
  ones.tail_bound = [](long N) {
    return zeta_minus_one_ub(N + 2).mul_2si(1);  // geometric ratio 1/2
  };
  Summed total = dirichlet_tail_sum(ones, p, eps);
  CHECK(total.value.contains(ExactRational(1)));

  // a_n = n+1 with sigma = 2: sum (n+1)(zeta(n+3)-1) = zeta(2) - 1
  DirichletSpec shifted;
  shifted.sigma = 2;
  shifted.a_seq = [](long n, const Precision& pp) {
    return Ball::from_long(n + 1, pp);
  };
  shifted.L_minus_one = [](long s, const Precision& pp) {
    return zeta_minus_one(s, pp);
  };
  shifted.tail_bound = [](long N) {
    Mag t = Mag::mul(Mag::from_ui(static_cast<unsigned long>(N + 1)),
                     zeta_minus_one_ub(N + 3));
    Mag q = Mag::div_ub_lb(
        Mag::from_ui(static_cast<unsigned long>(N + 2)),
        Mag::from_ui(static_cast<unsigned long>(N + 1)).mul_2si(1));
    if (!(q.to_double() < 1.0)) return Mag::inf();
    return Mag::div_ub_lb(t, Mag::sub_lb(Mag::from_ui(1), q));
  };
  Summed sh = dirichlet_tail_sum(shifted, p, eps);
  Ball expect = sub(zeta_oracle(2, 300), Ball::one(p), p);
  CHECK(overlaps(sh.value, expect));
}
