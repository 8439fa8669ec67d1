// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace abelzeta {

void validate(const Precision& p) {
  if (p.bits < 32) throw std::invalid_argument("Precision.bits must be >= 32");
  if (p.guard < 0) throw std::invalid_argument("Precision.guard must be >= 0");
}

// ---------------------------------------------------------------------------
// Real

Real::Real(long prec) {
  mpfr_init2(v_, std::max<long>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);  // same precision: exact
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_set_zero(v_, 1);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string decimal_str(mpfr_srcptr x, long sig_digits) {
  sig_digits = std::max<long>(sig_digits, 1);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", static_cast<int>(sig_digits - 1), x);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------------------
// Mag

Mag::Mag() : v_(kPrec) {}

Mag Mag::zero() { return Mag(); }

Mag Mag::inf() {
  Mag m;
  mpfr_set_inf(m.v_.raw(), 1);
  return m;
}

Mag Mag::from_ui(unsigned long v) {
  Mag m;
  mpfr_set_ui(m.v_.raw(), v, MPFR_RNDU);
  return m;
}

Mag Mag::from_d(double v) {
  if (v < 0) throw std::invalid_argument("Mag::from_d: negative");
  Mag m;
  mpfr_set_d(m.v_.raw(), v, MPFR_RNDU);
  return m;
}

Mag Mag::from_abs(mpfr_srcptr x) {
  Mag m;
  mpfr_abs(m.v_.raw(), x, MPFR_RNDU);
  return m;
}

Mag Mag::from_abs_lb(mpfr_srcptr x) {
  Mag m;
  mpfr_abs(m.v_.raw(), x, MPFR_RNDD);
  return m;
}

Mag Mag::from_mpz_abs(const mpz_class& z) {
  Mag m;
  mpfr_set_z(m.v_.raw(), z.get_mpz_t(), MPFR_RNDU);
  mpfr_abs(m.v_.raw(), m.v_.raw(), MPFR_RNDU);
  return m;
}

Mag Mag::from_mpq_abs(const mpq_class& q) {
  Mag m;
  mpfr_set_q(m.v_.raw(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(m.v_.raw(), m.v_.raw(), MPFR_RNDU);
  return m;
}

Mag Mag::from_mpq_abs_lb(const mpq_class& q) {
  Mag m;
  mpfr_set_q(m.v_.raw(), q.get_mpq_t(), MPFR_RNDZ);
  mpfr_abs(m.v_.raw(), m.v_.raw(), MPFR_RNDZ);
  return m;
}

Mag Mag::round_err(mpfr_srcptr mid, int ternary) {
  Mag m;
  if (ternary == 0 || mpfr_zero_p(mid)) return m;
  mpfr_exp_t e = mpfr_get_exp(mid);
  mpfr_set_ui_2exp(m.v_.raw(), 1, e - mpfr_get_prec(mid) - 1, MPFR_RNDU);
  return m;
}

Mag Mag::parse(const std::string& s) {
  Mag m;
  if (mpfr_set_str(m.v_.raw(), s.c_str(), 10, MPFR_RNDD) != 0)
    throw std::invalid_argument("Mag::parse: bad decimal: " + s);
  if (mpfr_sgn(m.v_.raw()) <= 0 || mpfr_nan_p(m.v_.raw()))
    throw std::invalid_argument("Mag::parse: must be positive: " + s);
  return m;
}

Mag Mag::add(const Mag& a, const Mag& b) {
  Mag m;
  mpfr_add(m.v_.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDU);
  return m;
}

Mag Mag::mul(const Mag& a, const Mag& b) {
  Mag m;
  if (a.is_zero() || b.is_zero()) return m;  // 0 * inf := 0 for magnitudes
  mpfr_mul(m.v_.raw(), a.v_.raw(), b.v_.raw(), MPFR_RNDU);
  return m;
}

Mag Mag::mul_lb(const Mag& a_lb, const Mag& b_lb) {
  Mag m;
  mpfr_mul(m.v_.raw(), a_lb.v_.raw(), b_lb.v_.raw(), MPFR_RNDD);
  return m;
}

Mag Mag::sub_lb(const Mag& a_lb, const Mag& b) {
  Mag m;
  mpfr_sub(m.v_.raw(), a_lb.v_.raw(), b.v_.raw(), MPFR_RNDD);
  if (mpfr_sgn(m.v_.raw()) < 0) mpfr_set_zero(m.v_.raw(), 1);
  return m;
}

Mag Mag::div_ub_lb(const Mag& num, const Mag& den_lb) {
  Mag m;
  if (mpfr_sgn(den_lb.v_.raw()) <= 0) return inf();
  mpfr_div(m.v_.raw(), num.v_.raw(), den_lb.v_.raw(), MPFR_RNDU);
  return m;
}

Mag Mag::pow_ui(const Mag& a, unsigned long k) {
  Mag m;
  mpfr_pow_ui(m.v_.raw(), a.v_.raw(), k, MPFR_RNDU);
  return m;
}

Mag Mag::pow_ui_lb(const Mag& a_lb, unsigned long k) {
  Mag m;
  mpfr_pow_ui(m.v_.raw(), a_lb.v_.raw(), k, MPFR_RNDD);
  return m;
}

Mag Mag::max(const Mag& a, const Mag& b) { return a.cmp(b) >= 0 ? a : b; }

Mag Mag::mul_2si(long k) const {
  Mag m;
  mpfr_mul_2si(m.v_.raw(), v_.raw(), k, MPFR_RNDU);
  return m;
}

std::string Mag::str() const {
  if (is_zero()) return "0";
  return decimal_str(v_.raw(), 3);
}

// ---------------------------------------------------------------------------
// Ball

Ball::Ball() : mid_(MPFR_PREC_MIN), rad_() {}

Ball Ball::zero(const Precision& p) {
  Ball b;
  b.mid_ = Real(p.work());
  return b;
}

Ball Ball::one(const Precision& p) { return from_long(1, p); }

Ball Ball::from_long(long v, const Precision& p) {
  Ball b;
  b.mid_ = Real(p.work());
  int t = mpfr_set_si(b.mid_.raw(), v, MPFR_RNDN);
  b.rad_ = Mag::round_err(b.mid_.raw(), t);
  return b;
}

Ball Ball::from_int(const mpz_class& v, const Precision& p) {
  Ball b;
  b.mid_ = Real(p.work());
  int t = mpfr_set_z(b.mid_.raw(), v.get_mpz_t(), MPFR_RNDN);
  b.rad_ = Mag::round_err(b.mid_.raw(), t);
  return b;
}

Ball Ball::from_rational(const mpq_class& v, const Precision& p) {
  Ball b;
  b.mid_ = Real(p.work());
  int t = mpfr_set_q(b.mid_.raw(), v.get_mpq_t(), MPFR_RNDN);
  b.rad_ = Mag::round_err(b.mid_.raw(), t);
  return b;
}

Ball Ball::from_midrad(Real mid, Mag rad) {
  Ball b;
  b.mid_ = std::move(mid);
  b.rad_ = std::move(rad);
  return b;
}

bool Ball::excludes_zero() const {
  if (mid_.is_zero()) return false;
  Mag lb = Mag::from_abs_lb(mid_.raw());
  return rad_.cmp(lb) < 0;
}

bool Ball::strictly_positive() const {
  return mid_.sign() > 0 && excludes_zero();
}

Mag Ball::abs_ub() const { return Mag::add(Mag::from_abs(mid_.raw()), rad_); }

Mag Ball::abs_lb() const {
  return Mag::sub_lb(Mag::from_abs_lb(mid_.raw()), rad_);
}

double Ball::upper_d() const {
  Real t(64);
  mpfr_set(t.raw(), mid_.raw(), MPFR_RNDU);
  mpfr_add(t.raw(), t.raw(), rad_.raw(), MPFR_RNDU);
  return mpfr_get_d(t.raw(), MPFR_RNDU);
}

double Ball::lower_d() const {
  Real t(64);
  mpfr_set(t.raw(), mid_.raw(), MPFR_RNDD);
  mpfr_sub(t.raw(), t.raw(), rad_.raw(), MPFR_RNDD);
  return mpfr_get_d(t.raw(), MPFR_RNDD);
}

bool Ball::contains(const mpq_class& q) const {
  // mpfr values are dyadic rationals, so both conversions are exact and the
  // test is decided without any rounding.
  mpq_class mid_q, rad_q;
  mpfr_get_q(mid_q.get_mpq_t(), mid_.raw());
  if (rad_.is_inf()) return true;
  mpfr_get_q(rad_q.get_mpq_t(), rad_.raw());
  mpq_class d = q - mid_q;
  return cmp(abs(d), rad_q) <= 0;
}

// ---------------------------------------------------------------------------
// kernel operations

Ball add(const Ball& a, const Ball& b, const Precision& p) {
  Real mid(p.work());
  int t = mpfr_add(mid.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDN);
  Mag rad = Mag::add(Mag::add(a.rad(), b.rad()), Mag::round_err(mid.raw(), t));
  return Ball::from_midrad(std::move(mid), std::move(rad));
}

Ball sub(const Ball& a, const Ball& b, const Precision& p) {
  Real mid(p.work());
  int t = mpfr_sub(mid.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDN);
  Mag rad = Mag::add(Mag::add(a.rad(), b.rad()), Mag::round_err(mid.raw(), t));
  return Ball::from_midrad(std::move(mid), std::move(rad));
}

Ball mul(const Ball& a, const Ball& b, const Precision& p) {
  Real mid(p.work());
  int t = mpfr_mul(mid.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDN);
  // |am|*rb + |bm|*ra + ra*rb, all rounded up.
  Mag rad = Mag::add(
      Mag::add(Mag::mul(Mag::from_abs(a.mid().raw()), b.rad()),
               Mag::mul(Mag::from_abs(b.mid().raw()), a.rad())),
      Mag::add(Mag::mul(a.rad(), b.rad()), Mag::round_err(mid.raw(), t)));
  return Ball::from_midrad(std::move(mid), std::move(rad));
}

Ball div(const Ball& a, const Ball& b, const Precision& p) {
  if (!b.excludes_zero())
    throw DomainError("ball division: divisor ball contains zero");
  Real mid(p.work());
  int t = mpfr_div(mid.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDN);
  // |x/y - am/bm| <= (ra*|bm| + |am|*rb) / (|bm| * (|bm| - rb)).
  Mag num = Mag::add(Mag::mul(a.rad(), Mag::from_abs(b.mid().raw())),
                     Mag::mul(Mag::from_abs(a.mid().raw()), b.rad()));
  Mag bm_lb = Mag::from_abs_lb(b.mid().raw());
  Mag den_lb = Mag::mul_lb(bm_lb, Mag::sub_lb(bm_lb, b.rad()));
  Mag rad = Mag::add(Mag::div_ub_lb(num, den_lb), Mag::round_err(mid.raw(), t));
  return Ball::from_midrad(std::move(mid), std::move(rad));
}

Ball neg(const Ball& a) {
  Real mid(a.mid().prec());
  mpfr_neg(mid.raw(), a.mid().raw(), MPFR_RNDN);  // exact
  return Ball::from_midrad(std::move(mid), a.rad());
}

Ball ldexp_ball(const Ball& a, long k) {
  Real mid(a.mid().prec());
  mpfr_mul_2si(mid.raw(), a.mid().raw(), k, MPFR_RNDN);  // exact
  return Ball::from_midrad(std::move(mid), a.rad().mul_2si(k));
}

Ball pow_int(const Ball& a, long k, const Precision& p) {
  if (k < 0) return div(Ball::one(p), pow_int(a, -k, p), p);
  Ball result = Ball::one(p);
  Ball base = a;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1UL) result = mul(result, base, p);
    e >>= 1;
    if (e > 0) base = mul(base, base, p);
  }
  return result;
}

Ball inflate(const Ball& a, const Mag& extra) {
  return Ball::from_midrad(a.mid(), Mag::add(a.rad(), extra));
}

bool overlaps(const Ball& a, const Ball& b) {
  Real d(std::max(a.mid().prec(), b.mid().prec()) + 64);
  mpfr_sub(d.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDA);
  Mag delta = Mag::from_abs(d.raw());
  return delta.leq(Mag::add(a.rad(), b.rad()));
}

Real ball_gap(const Ball& a, const Ball& b) {
  long prec = std::max(a.mid().prec(), b.mid().prec()) + 64;
  Real g(prec);
  mpfr_sub(g.raw(), a.mid().raw(), b.mid().raw(), MPFR_RNDN);
  mpfr_abs(g.raw(), g.raw(), MPFR_RNDN);
  mpfr_sub(g.raw(), g.raw(), a.rad().raw(), MPFR_RNDN);
  mpfr_sub(g.raw(), g.raw(), b.rad().raw(), MPFR_RNDN);
  if (mpfr_sgn(g.raw()) < 0) mpfr_set_zero(g.raw(), 1);
  return g;
}

bool identical(const Ball& a, const Ball& b) {
  if (a.mid().prec() != b.mid().prec()) return false;
  if (!mpfr_equal_p(a.mid().raw(), b.mid().raw())) return false;
  return mpfr_equal_p(a.rad().raw(), b.rad().raw()) != 0;
}

// ---------------------------------------------------------------------------
// adaptive loop

Ball adaptive_eval(const std::function<Ball(const Precision&)>& f,
                   const Mag& eps, Precision start, int max_doublings) {
  validate(start);
  Precision p = start;
  Ball best;
  bool have_best = false;
  for (int i = 0; i <= max_doublings; ++i) {
    Ball b = f(p);
    if (b.rad().leq(eps)) return b;
    if (!have_best || b.rad().cmp(best.rad()) < 0) {
      best = b;
      have_best = true;
    }
    p = p.doubled();
  }
  throw PrecisionFailure("adaptive_eval: target radius not reached after " +
                             std::to_string(max_doublings) + " doublings",
                         best);
}

}  // namespace abelzeta
