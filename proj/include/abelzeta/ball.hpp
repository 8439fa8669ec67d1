// SPDX-License-Identifier: Apache-2.0
//
// Midpoint-radius (ball) arithmetic over MPFR reals.
//
// Contract: every operation returns a ball that contains the exact
// mathematical result for all points of the input balls. Midpoints are
// rounded to nearest and the rounding error is folded into the radius;
// radii are kept at a small fixed precision and always rounded upward.

#pragma once

#include <mpfr.h>

#include <functional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace abelzeta {

// Working precision: `bits` of requested accuracy plus `guard` bits that
// absorb accumulated rounding inside multi-step evaluations.
struct Precision {
  long bits = 256;
  long guard = 16;

  long work() const { return bits + guard; }
  Precision doubled() const { return Precision{bits * 2, guard}; }
};

// bits >= 32, guard >= 0.
void validate(const Precision& p);

// RAII value wrapper for one mpfr number.
class Real {
 public:
  explicit Real(long prec = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// Decimal rendering with `sig_digits` significant digits ("%.*Re").
std::string decimal_str(mpfr_srcptr x, long sig_digits);

// Nonnegative magnitude for radii and tail bounds. Fixed 64-bit precision;
// all plain operations round up, so a Mag built from upper bounds stays an
// upper bound. The *_lb helpers round down and are used for the certified
// lower bounds that show up in denominators.
class Mag {
 public:
  static constexpr long kPrec = 64;

  Mag();  // zero

  static Mag zero();
  static Mag inf();
  static Mag from_ui(unsigned long v);
  static Mag from_d(double v);                  // v >= 0, rounded up
  static Mag from_abs(mpfr_srcptr x);           // |x| rounded up
  static Mag from_abs_lb(mpfr_srcptr x);        // |x| rounded down
  static Mag from_mpz_abs(const mpz_class& z);  // |z| rounded up
  static Mag from_mpq_abs(const mpq_class& q);  // |q| rounded up
  static Mag from_mpq_abs_lb(const mpq_class& q);
  // 2^(exp-prec-1): half an ulp of `mid`; zero when `ternary` says the
  // preceding mpfr operation was exact or mid is zero.
  static Mag round_err(mpfr_srcptr mid, int ternary);
  // Parse a positive decimal like "1e-40"; rounds down (a stricter target).
  static Mag parse(const std::string& s);

  static Mag add(const Mag& a, const Mag& b);
  static Mag mul(const Mag& a, const Mag& b);
  static Mag mul_lb(const Mag& a_lb, const Mag& b_lb);
  // a_lb - b rounded down, clamped at zero.
  static Mag sub_lb(const Mag& a_lb, const Mag& b);
  // num / den_lb rounded up; den_lb must be a lower bound of the divisor.
  static Mag div_ub_lb(const Mag& num, const Mag& den_lb);
  static Mag pow_ui(const Mag& a, unsigned long k);
  static Mag pow_ui_lb(const Mag& a_lb, unsigned long k);
  static Mag max(const Mag& a, const Mag& b);

  Mag mul_2si(long k) const;  // exact scaling by 2^k

  bool is_zero() const { return mpfr_zero_p(v_.raw()) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_.raw()) != 0; }
  int cmp(const Mag& o) const { return mpfr_cmp(v_.raw(), o.v_.raw()); }
  bool leq(const Mag& o) const { return cmp(o) <= 0; }

  double to_double() const { return mpfr_get_d(v_.raw(), MPFR_RNDU); }
  std::string str() const;
  mpfr_srcptr raw() const { return v_.raw(); }
  mpfr_ptr raw() { return v_.raw(); }

 private:
  Real v_;
};

class Ball {
 public:
  Ball();  // exact zero at minimal precision

  static Ball zero(const Precision& p);
  static Ball one(const Precision& p);
  static Ball from_long(long v, const Precision& p);
  static Ball from_int(const mpz_class& v, const Precision& p);
  static Ball from_rational(const mpq_class& v, const Precision& p);
  static Ball from_midrad(Real mid, Mag rad);

  const Real& mid() const { return mid_; }
  const Mag& rad() const { return rad_; }

  bool is_exact() const { return rad_.is_zero(); }
  // True when the ball provably excludes zero: |mid|_lb > rad.
  bool excludes_zero() const;
  // True when the whole ball is > 0 (resp. touches <= 0).
  bool strictly_positive() const;

  Mag abs_ub() const;  // |mid| + rad, rounded up
  Mag abs_lb() const;  // |mid| - rad, rounded down, clamped at 0

  double upper_d() const;  // mid + rad rounded up (signed, for branching)
  double lower_d() const;  // mid - rad rounded down

  // Exact containment test against a rational, decided in mpq arithmetic.
  bool contains(const mpq_class& q) const;

 private:
  Real mid_;
  Mag rad_;
};

Ball add(const Ball& a, const Ball& b, const Precision& p);
Ball sub(const Ball& a, const Ball& b, const Precision& p);
Ball mul(const Ball& a, const Ball& b, const Precision& p);
// Divisor ball must exclude zero; throws DomainError otherwise.
Ball div(const Ball& a, const Ball& b, const Precision& p);
Ball neg(const Ball& a);                   // exact
Ball ldexp_ball(const Ball& a, long k);    // exact scaling by 2^k
// a^k by binary exponentiation; k < 0 requires a to exclude zero.
Ball pow_int(const Ball& a, long k, const Precision& p);
// Widen the radius by an extra error term.
Ball inflate(const Ball& a, const Mag& extra);

// |a.mid - b.mid| <= a.rad + b.rad, the shared-point test used for verdicts.
bool overlaps(const Ball& a, const Ball& b);
// max(0, |a.mid - b.mid| - (a.rad + b.rad)) at combined precision.
Real ball_gap(const Ball& a, const Ball& b);
// Bit-identical midpoints and radii (determinism checks).
bool identical(const Ball& a, const Ball& b);

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation that could not reach its target; carries the best ball achieved.
class EvalFailure : public std::runtime_error {
 public:
  EvalFailure(const std::string& what, Ball best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const Ball& best() const { return best_; }

 private:
  Ball best_;
};

class PrecisionFailure : public EvalFailure {
 public:
  using EvalFailure::EvalFailure;
};

class ConvergenceFailure : public EvalFailure {
 public:
  using EvalFailure::EvalFailure;
};

// Runs `f` at `start`, doubling `bits` until the result radius is <= eps.
// Throws PrecisionFailure (carrying the best ball) after `max_doublings`
// unsuccessful doublings.
Ball adaptive_eval(const std::function<Ball(const Precision&)>& f,
                   const Mag& eps, Precision start, int max_doublings = 10);

}  // namespace abelzeta
