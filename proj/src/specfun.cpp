// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/specfun.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace abelzeta {

namespace {

// 1/base^s with the integer power exact and a single tracked rounding.
Ball inv_pow_ui(unsigned long base, unsigned long s, const Precision& p) {
  ExactInt t;
  mpz_ui_pow_ui(t.get_mpz_t(), base, s);
  return div(Ball::one(p), Ball::from_int(t, p), p);
}

// q^{-s} for exact rational q > 0, again with one tracked rounding.
Ball inv_pow_q(const ExactRational& q, unsigned long s, const Precision& p) {
  ExactInt num_pow, den_pow;
  mpz_pow_ui(num_pow.get_mpz_t(), q.get_num().get_mpz_t(), s);
  mpz_pow_ui(den_pow.get_mpz_t(), q.get_den().get_mpz_t(), s);
  ExactRational r(den_pow, num_pow);
  r.canonicalize();
  return Ball::from_rational(r, p);
}

// Certified lower bound of 2*pi.
const ExactRational& two_pi_lb_q() {
  static const ExactRational q = [] {
    ExactRational v(ExactInt("6283185307179586"), ExactInt("1000000000000000"));
    v.canonicalize();
    return v;
  }();
  return q;
}

struct SKey {
  long s;
  long wp;
  bool operator<(const SKey& o) const {
    return std::tie(s, wp) < std::tie(o.s, o.wp);
  }
};

struct HKey {
  long s;
  long wp;
  ExactRational a;
  bool operator<(const HKey& o) const {
    if (s != o.s) return s < o.s;
    if (wp != o.wp) return wp < o.wp;
    return cmp(a, o.a) < 0;
  }
};

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

template <typename Key>
bool cache_get(const std::map<Key, Ball>& m, const Key& k, Ball& out) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = m.find(k);
  if (it == m.end()) return false;
  out = it->second;
  return true;
}

template <typename Key>
Ball cache_put(std::map<Key, Ball>& m, const Key& k, Ball v) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = m.emplace(k, std::move(v));
  (void)inserted;  // first writer wins; the value is a pure function of k
  return it->second;
}

std::map<SKey, Ball>& zm1_cache() {
  static std::map<SKey, Ball> m;
  return m;
}
std::map<SKey, Ball>& zint_cache() {
  static std::map<SKey, Ball> m;
  return m;
}
std::map<SKey, Ball>& psi1_cache() {
  static std::map<SKey, Ball> m;
  return m;
}
std::map<long, Ball>& gamma_cache() {
  static std::map<long, Ball> m;
  return m;
}
std::map<HKey, Ball>& hz_cache() {
  static std::map<HKey, Ball> m;
  return m;
}

void check_domain_04(const Ball& a, const char* who) {
  if (!a.strictly_positive())
    throw DomainError(std::string(who) + ": argument ball must be > 0");
  if (a.abs_ub().cmp(Mag::from_ui(4)) > 0)
    throw DomainError(std::string(who) + ": argument ball must lie in (0, 4]");
}

Ball zeta_minus_one_uncached(long s, const Precision& p) {
  const long wp = p.work();
  const long J = detail::em_order(wp);
  const long k_em = s + 2 * J + 4;
  // Route choice is performance-only: either closure carries a rigorous
  // remainder, and the adaptive loop re-enters at higher precision if the
  // radius falls short.
  const double expo = (double(wp) + double(s) + 2.0) / (double(s) - 1.0);
  if (expo <= 18.0) {
    long k_direct = static_cast<long>(std::ceil(std::exp2(expo))) + 1;
    if (k_direct <= k_em) {
      Ball sum = Ball::zero(p);
      for (long n = 2; n <= k_direct + 1; ++n)
        sum = add(sum, inv_pow_ui(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(s), p),
                  p);
      // sum_{n >= K+2} n^{-s} <= (K+1)^{1-s}/(s-1)
      Mag rem = Mag::div_ub_lb(
          Mag::from_ui(1),
          Mag::mul_lb(Mag::pow_ui_lb(Mag::from_ui(k_direct + 1),
                                     static_cast<unsigned long>(s - 1)),
                      Mag::from_ui(static_cast<unsigned long>(s - 1))));
      return inflate(sum, rem);
    }
  }
  Ball sum = Ball::zero(p);
  for (long n = 2; n <= k_em + 1; ++n)
    sum = add(sum, inv_pow_ui(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(s), p),
              p);
  Ball tail = detail::hurwitz_tail_from(s, Ball::from_long(k_em + 2, p), J, p);
  return add(sum, tail, p);
}

Ball euler_gamma_uncached(const Precision& p) {
  const long K = p.work() + 6;
  Ball acc = Ball::one(p);
  for (long k = 2; k <= K; ++k)
    acc = sub(acc, div(zeta_minus_one(k, p), Ball::from_long(k, p), p), p);
  // sum_{k>K} (zeta(k)-1)/k <= 2^{1-K}/(K+1), from zeta(k)-1 <= 2^{1-k}.
  Mag tail = Mag::div_ub_lb(Mag::from_ui(1).mul_2si(1 - K),
                            Mag::from_ui(static_cast<unsigned long>(K + 1)));
  return inflate(acc, tail);
}

// Taylor series psi(1+z) = -gamma - sum_{k>=1} zeta(k+1) (-z)^k after
// reduction of the argument into [1/2, 3/2].
Ball digamma(Ball x, const Precision& p) {
  Ball corr = Ball::zero(p);
  int guard_iters = 0;
  while (x.upper_d() > 1.5 + 1e-9) {
    if (++guard_iters > 8)
      throw DomainError("polygamma: argument ball too wide to reduce");
    x = sub(x, Ball::one(p), p);
    corr = add(corr, div(Ball::one(p), x, p), p);
  }
  if (x.lower_d() < 0.5 - 1e-9) {
    corr = sub(corr, div(Ball::one(p), x, p), p);
    x = add(x, Ball::one(p), p);
  }
  Ball z = sub(x, Ball::one(p), p);
  Mag zu = z.abs_ub();
  if (!(zu.to_double() < 0.8))
    throw DomainError("polygamma: argument ball too wide for the series");
  Ball acc = neg(euler_gamma(p));
  if (!zu.is_zero()) {
    const double l2 = -std::log2(zu.to_double());
    const long K =
        static_cast<long>(std::ceil((double(p.work()) + 4.0) / l2)) + 1;
    Ball w = neg(z);
    Ball pw = w;
    for (long k = 1; k <= K; ++k) {
      acc = sub(acc, mul(zeta_int(k + 1, p), pw, p), p);
      if (k < K) pw = mul(pw, w, p);
    }
    // sum_{k>K} zeta(k+1)|z|^k <= 2 |z|^{K+1} / (1 - |z|)
    Mag tail = Mag::div_ub_lb(
        Mag::mul(Mag::from_ui(2),
                 Mag::pow_ui(zu, static_cast<unsigned long>(K + 1))),
        Mag::sub_lb(Mag::from_ui(1), zu));
    acc = inflate(acc, tail);
  }
  return add(acc, corr, p);
}

}  // namespace

namespace detail {

long em_order(long work_bits) { return std::max<long>(8, work_bits / 6 + 2); }

Ball hurwitz_tail_from(long s, const Ball& x0, long J, const Precision& p) {
  if (s < 2) throw std::invalid_argument("hurwitz_tail_from: s >= 2 required");
  // x0^{1-s}/(s-1) + x0^{-s}/2
  //   + sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} x0^{-s-2j+1} + R
  Ball inv = div(Ball::one(p), x0, p);
  Ball x_pow = pow_int(inv, s - 1, p);  // x0^{1-s}
  Ball acc = div(x_pow, Ball::from_long(s - 1, p), p);
  Ball invs = mul(x_pow, inv, p);  // x0^{-s}
  acc = add(acc, ldexp_ball(invs, -1), p);
  Ball inv2 = mul(inv, inv, p);
  Ball q = mul(invs, inv, p);  // x0^{-s-1}
  for (long j = 1; j <= J; ++j) {
    ExactRational c = bernoulli(static_cast<unsigned long>(2 * j));
    c /= ExactRational(factorial(static_cast<unsigned long>(2 * j)));
    c *= ExactRational(rising_factorial(static_cast<unsigned long>(s - 1),
                                        static_cast<unsigned long>(2 * j - 1)));
    acc = add(acc, mul(Ball::from_rational(c, p), q, p), p);
    if (j < J) q = mul(q, inv2, p);
  }
  // |R| <= 4 (s)_{2J} / ((2 pi)^{2J+1} x0^{s+2J}), periodic-Bernoulli bound.
  Mag num = Mag::mul(
      Mag::from_ui(4),
      Mag::from_mpz_abs(rising_factorial(static_cast<unsigned long>(s - 1),
                                         static_cast<unsigned long>(2 * J))));
  Mag twopi_lb = Mag::from_mpq_abs_lb(two_pi_lb_q());
  Mag den_lb =
      Mag::mul_lb(Mag::pow_ui_lb(twopi_lb, static_cast<unsigned long>(2 * J + 1)),
                  Mag::pow_ui_lb(x0.abs_lb(), static_cast<unsigned long>(s + 2 * J)));
  return inflate(acc, Mag::div_ub_lb(num, den_lb));
}

Ball zeta_euler_maclaurin(long s, const Precision& p) {
  if (s < 2) throw std::invalid_argument("zeta_euler_maclaurin: s >= 2");
  validate(p);
  const long J = em_order(p.work()) + 3;
  const long K = s + 2 * J + 9;
  Ball sum = Ball::zero(p);
  for (long n = 1; n <= K; ++n)
    sum = add(sum, inv_pow_ui(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(s), p),
              p);
  return add(sum, hurwitz_tail_from(s, Ball::from_long(K + 1, p), J, p), p);
}

}  // namespace detail

Ball zeta_minus_one(long s, const Precision& p) {
  if (s < 2) throw std::invalid_argument("zeta_minus_one: s >= 2 required");
  validate(p);
  SKey key{s, p.work()};
  Ball out;
  if (cache_get(zm1_cache(), key, out)) return out;
  return cache_put(zm1_cache(), key, zeta_minus_one_uncached(s, p));
}

Ball zeta_int(long s, const Precision& p) {
  if (s < 2) throw std::invalid_argument("zeta_int: s >= 2 required");
  validate(p);
  SKey key{s, p.work()};
  Ball out;
  if (cache_get(zint_cache(), key, out)) return out;
  Ball a = add(Ball::one(p), zeta_minus_one(s, p), p);
  Ball b = detail::zeta_euler_maclaurin(s, p);
  if (!overlaps(a, b))
    throw std::logic_error("zeta_int: the two evaluation routes disagree at s=" +
                           std::to_string(s));
  return cache_put(zint_cache(), key, std::move(a));
}

Ball hurwitz_zeta(long s, const Ball& a, const Precision& p) {
  if (s < 2) throw std::invalid_argument("hurwitz_zeta: s >= 2 required");
  validate(p);
  check_domain_04(a, "hurwitz_zeta");

  ExactRational aq;
  const bool exact_a = a.is_exact();
  if (exact_a) mpfr_get_q(aq.get_mpq_t(), a.mid().raw());

  HKey key{s, p.work(), exact_a ? aq : ExactRational(0)};
  Ball out;
  if (exact_a && cache_get(hz_cache(), key, out)) return out;

  const long wp = p.work();
  const long J = detail::em_order(wp);
  const long k_em = s + 2 * J + 4;

  long terms = k_em;
  bool integral_route = false;
  const double a_ub = a.abs_ub().to_double();
  const double expo = (double(wp) + 5.0) / (double(s) - 1.0);
  if (expo <= 18.0) {
    long k_direct = static_cast<long>(std::ceil(a_ub * std::exp2(expo))) + 2;
    if (k_direct <= k_em) {
      terms = k_direct;
      integral_route = true;
    }
  }

  auto term_at = [&](long n) {
    if (exact_a) return inv_pow_q(aq + n, static_cast<unsigned long>(s), p);
    return pow_int(add(a, Ball::from_long(n, p), p), -s, p);
  };

  Ball sum = Ball::zero(p);
  for (long n = 0; n < terms; ++n) sum = add(sum, term_at(n), p);

  Ball result;
  if (integral_route) {
    // sum_{n>=K} (n+a)^{-s} <= (K-1+a)^{1-s}/(s-1)
    Mag x_lb = add(a, Ball::from_long(terms - 1, p), p).abs_lb();
    Mag rem = Mag::div_ub_lb(
        Mag::from_ui(1),
        Mag::mul_lb(Mag::pow_ui_lb(x_lb, static_cast<unsigned long>(s - 1)),
                    Mag::from_ui(static_cast<unsigned long>(s - 1))));
    result = inflate(sum, rem);
  } else {
    Ball tail = detail::hurwitz_tail_from(
        s, add(a, Ball::from_long(terms, p), p), J, p);
    result = add(sum, tail, p);
  }
  if (exact_a) return cache_put(hz_cache(), key, std::move(result));
  return result;
}

Ball polygamma(long m, const Ball& x, const Precision& p) {
  if (m < 0) throw std::invalid_argument("polygamma: m >= 0 required");
  validate(p);
  check_domain_04(x, "polygamma");
  if (m == 0) return digamma(x, p);
  Ball r = mul(Ball::from_int(factorial(static_cast<unsigned long>(m)), p),
               hurwitz_zeta(m + 1, x, p), p);
  return (m % 2 == 0) ? neg(r) : r;  // sign (-1)^{m+1}
}

Ball polygamma_at_one(long m, const Precision& p) {
  if (m < 0) throw std::invalid_argument("polygamma_at_one: m >= 0 required");
  validate(p);
  if (m == 0) return neg(euler_gamma(p));
  SKey key{m, p.work()};
  Ball out;
  if (cache_get(psi1_cache(), key, out)) return out;
  Ball r = mul(Ball::from_int(factorial(static_cast<unsigned long>(m)), p),
               zeta_int(m + 1, p), p);
  if (m % 2 == 0) r = neg(r);
  return cache_put(psi1_cache(), key, std::move(r));
}

Ball euler_gamma(const Precision& p) {
  validate(p);
  Ball out;
  const long wp = p.work();
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = gamma_cache().find(wp);
    if (it != gamma_cache().end()) return it->second;
  }
  Ball v = euler_gamma_uncached(p);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = gamma_cache().emplace(wp, std::move(v));
  (void)inserted;
  return it->second;
}

ExactInt stirling2(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  static std::mutex mu;
  static std::vector<std::vector<ExactInt>> tri = {{ExactInt(1)}};
  std::lock_guard<std::mutex> lock(mu);
  while (tri.size() <= n) {
    const size_t m = tri.size();
    std::vector<ExactInt> row(m + 1);
    row[0] = 0;
    row[m] = 1;
    for (size_t j = 1; j < m; ++j)
      row[j] = ExactInt(j) * tri[m - 1][j] + tri[m - 1][j - 1];
    tri.push_back(std::move(row));
  }
  return tri[n][k];
}

ExactInt rising_factorial(unsigned long n, unsigned long M) {
  ExactInt r = 1;
  for (unsigned long i = 1; i <= M; ++i) r *= ExactInt(n + i);
  return r;
}

ExactRational bernoulli(unsigned long n) {
  static std::mutex mu;
  static std::vector<ExactRational> tab = {ExactRational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (tab.size() <= n) {
    const unsigned long m = tab.size();
    ExactRational s = 0;
    for (unsigned long j = 0; j < m; ++j)
      s += ExactRational(binomial(m + 1, j)) * tab[j];
    s /= ExactRational(static_cast<long>(m) + 1);
    tab.push_back(-s);
  }
  return tab[n];
}

Mag zeta_minus_one_ub(long s) {
  if (s < 2) throw std::invalid_argument("zeta_minus_one_ub: s >= 2");
  Mag lead = Mag::from_ui(1).mul_2si(-s);
  Mag corr = Mag::div_ub_lb(Mag::from_ui(2),
                            Mag::from_ui(static_cast<unsigned long>(s - 1)));
  return Mag::mul(lead, Mag::add(Mag::from_ui(1), corr));
}

}  // namespace abelzeta
