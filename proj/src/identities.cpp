// SPDX-License-Identifier: Apache-2.0

#include "abelzeta/identities.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <thread>

#include "abelzeta/specfun.hpp"

namespace abelzeta {

std::string to_string(Variant v) {
  return v == Variant::as_printed ? "as_printed" : "corrected_candidate";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

std::string to_string(GammaSign s) {
  return s == GammaSign::plus_gamma ? "plus_gamma" : "minus_gamma";
}

std::optional<Variant> variant_from_string(const std::string& s) {
  if (s == "as_printed") return Variant::as_printed;
  if (s == "corrected_candidate") return Variant::corrected_candidate;
  return std::nullopt;
}

SuiteConfig::SuiteConfig() {
  jobs = std::max(1u, std::thread::hardware_concurrency());
  z_grid = {make_rational(1, 64), make_rational(1, 4), make_rational(1, 2),
            make_rational(3, 4)};
  a25_grid = {make_rational(1, 1), make_rational(3, 2)};
  z25_grid = {make_rational(1, 4), make_rational(1, 2)};
  z28_grid = {make_rational(1, 2), make_rational(1, 3), make_rational(2, 3)};
}

namespace {

struct EvalOut {
  Ball value;
  long terms = 0;
  bool eps_met = true;
};

EvalOut eval_adaptive(const std::function<Summed(const Precision&)>& f,
                      const Mag& eps, const Precision& start,
                      int max_doublings) {
  EvalOut out;
  long terms = 0;
  try {
    out.value = adaptive_eval(
        [&](const Precision& p) {
          Summed s = f(p);
          terms = s.terms;
          return s.value;
        },
        eps, start, max_doublings);
    out.terms = terms;
  } catch (const EvalFailure& e) {
    out.value = e.best();
    out.terms = terms;
    out.eps_met = false;
  }
  return out;
}

using Params = std::vector<std::pair<std::string, std::string>>;

IdentityReport finish_report(std::string id, Params params, Variant v,
                             const EvalOut& lhs, const EvalOut& rhs,
                             long guard) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.variant = v;
  r.lhs = lhs.value;
  r.rhs = rhs.value;
  const bool hit = overlaps(lhs.value, rhs.value);
  if (!hit)
    r.verdict = Verdict::fail;
  else
    r.verdict = (lhs.eps_met && rhs.eps_met) ? Verdict::pass
                                             : Verdict::inconclusive;
  r.gap = ball_gap(lhs.value, rhs.value);
  r.terms_used = lhs.terms;
  r.prec_bits = lhs.value.mid().prec() - guard;
  return r;
}

// Tail certificate for sum_{n>=N} (n+1)_{M-1} (n+M+1)^W ub(zeta(n+M+1)-1):
// first-bound times geometric closure with per-step ratio
// (n+M)/(2(n+1)) * ((n+M+2)/(n+M+1))^W, decreasing in n.
Mag zeta_family_tail(long M, long W, long N) {
  Mag t = Mag::mul(Mag::from_mpz_abs(rising_factorial(
                       static_cast<unsigned long>(N),
                       static_cast<unsigned long>(M - 1))),
                   zeta_minus_one_ub(N + M + 1));
  if (W > 0)
    t = Mag::mul(t, Mag::pow_ui(Mag::from_ui(static_cast<unsigned long>(
                                    N + M + 1)),
                                static_cast<unsigned long>(W)));
  Mag q = Mag::div_ub_lb(Mag::from_ui(static_cast<unsigned long>(N + M)),
                         Mag::from_ui(static_cast<unsigned long>(N + 1))
                             .mul_2si(1));
  if (W > 0) {
    Mag growth = Mag::div_ub_lb(
        Mag::from_ui(static_cast<unsigned long>(N + M + 2)),
        Mag::from_ui(static_cast<unsigned long>(N + M + 1)));
    q = Mag::mul(q, Mag::pow_ui(growth, static_cast<unsigned long>(W)));
  }
  if (!(q.to_double() < 1.0)) return Mag::inf();
  return Mag::div_ub_lb(t, Mag::sub_lb(Mag::from_ui(1), q));
}

SequenceSpec zeta_sequence(long M) {
  SequenceSpec s;
  s.term = [](long n, const Precision& p) { return zeta_int(n + 2, p); };
  s.limit = Ball::from_long(1, Precision{32, 0});
  s.defect = [](long n, const Precision& p) {
    return neg(zeta_minus_one(n + 2, p));
  };
  s.tail_bound = [M](long N) { return zeta_family_tail(M, 0, N); };
  return s;
}

SequenceSpec thm23_sequence(long M, long N) {
  SequenceSpec s;
  s.term = [N](long n, const Precision& p) {
    ExactInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(n + 2),
                  static_cast<unsigned long>(N));
    return mul(Ball::from_int(w, p), zeta_minus_one(n + 2, p), p);
  };
  s.limit = Ball::zero(Precision{32, 0});
  s.defect = [N](long n, const Precision& p) {
    ExactInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(n + 2),
                  static_cast<unsigned long>(N));
    return neg(mul(Ball::from_int(w, p), zeta_minus_one(n + 2, p), p));
  };
  s.tail_bound = [M, N](long idx) { return zeta_family_tail(M, N, idx); };
  return s;
}

// sum_{k>=k0} k^W r^k <= k0^W r^{k0} / (1 - q), q = ((k0+1)/k0)^W r.
Mag poly_geom_tail(long k0, long W, const Mag& r_ub) {
  Mag t = Mag::pow_ui(r_ub, static_cast<unsigned long>(k0));
  if (W > 0)
    t = Mag::mul(t, Mag::pow_ui(Mag::from_ui(static_cast<unsigned long>(k0)),
                                static_cast<unsigned long>(W)));
  Mag q = r_ub;
  if (W > 0) {
    Mag growth =
        Mag::div_ub_lb(Mag::from_ui(static_cast<unsigned long>(k0 + 1)),
                       Mag::from_ui(static_cast<unsigned long>(k0)));
    q = Mag::mul(q, Mag::pow_ui(growth, static_cast<unsigned long>(W)));
  }
  if (!(q.to_double() < 1.0)) return Mag::inf();
  return Mag::div_ub_lb(t, Mag::sub_lb(Mag::from_ui(1), q));
}

ExactRational pow_q(const ExactRational& z, unsigned long k) {
  ExactInt n, d;
  mpz_pow_ui(n.get_mpz_t(), z.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), z.get_den().get_mpz_t(), k);
  ExactRational r(n, d);
  r.canonicalize();
  return r;
}

std::string q_str(const ExactRational& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------------------
// paired evaluators

IdentityReport goldbach(const Precision& p, const Mag& eps, long term_cap,
                        int max_doublings) {
  validate(p);
  SequenceSpec seq = zeta_sequence(1);
  EvalOut lhs = eval_adaptive(
      [&](const Precision& pp) { return abel_rhs_sum(seq, 1, pp, eps, term_cap); },
      eps, p, max_doublings);
  EvalOut rhs{Ball::from_long(-1, p), 0, true};
  return finish_report("goldbach", {}, Variant::as_printed, lhs, rhs, p.guard);
}

Summed thm22_lhs(long M, const Precision& p, const Mag& eps, long term_cap) {
  if (M < 1) throw std::invalid_argument("thm22_lhs: M >= 1 required");
  return abel_rhs_sum(zeta_sequence(M), M, p, eps, term_cap);
}

Ball thm22_rhs(long M, Variant v, const Precision& p) {
  if (M < 1) throw std::invalid_argument("thm22_rhs: M >= 1 required");
  validate(p);
  Ball sum = Ball::zero(p);
  for (long j = 0; j <= M - 1; ++j) {
    ExactInt c = binomial(static_cast<unsigned long>(M - 1),
                          static_cast<unsigned long>(j)) *
                 factorial(static_cast<unsigned long>(j));
    sum = add(sum, mul(Ball::from_int(c, p), polygamma_at_one(M - j - 1, p), p),
              p);
  }
  const bool m_even = (M % 2 == 0);
  // as printed both the psi-sum and the gamma term carry (-1)^M; the
  // corrected candidate flips both to (-1)^{M+1}.
  const bool sum_pos = (v == Variant::as_printed) ? m_even : !m_even;
  if (!sum_pos) sum = neg(sum);
  ExactInt fact = factorial(static_cast<unsigned long>(M - 1));
  Ball t2 = Ball::from_int(m_even ? fact : -fact, p);
  Ball t3 = mul(Ball::from_int(fact, p), euler_gamma(p), p);
  if (!sum_pos) t3 = neg(t3);  // gamma sign always matches the psi-sum sign
  return add(add(sum, t2, p), t3, p);
}

GCoefficient g_coefficient(long M, long l, long e, const Precision& p) {
  if (M < 1 || l < 1 || e < 0)
    throw std::invalid_argument("g_coefficient: need M >= 1, l >= 1, e >= 0");
  GCoefficient g;
  g.M = M;
  g.l = l;
  g.e = e;
  g.value = div(derivative_limit_psi_power(l, M, e, p), Ball::from_long(M, p),
                p);
  return g;
}

Summed thm23_lhs(long M, long N, const Precision& p, const Mag& eps,
                 long term_cap) {
  if (M < 1 || N < 1)
    throw std::invalid_argument("thm23_lhs: M, N >= 1 required");
  return abel_rhs_sum(thm23_sequence(M, N), M, p, eps, term_cap);
}

Ball thm23_rhs(long M, long N, Variant v, const Precision& p) {
  if (M < 1 || N < 1)
    throw std::invalid_argument("thm23_rhs: M, N >= 1 required");
  validate(p);
  Ball acc = Ball::zero(p);
  for (long l = 1; l <= N; ++l) {
    const long e = (v == Variant::as_printed) ? l + 1 : l - 1;
    ExactInt c = stirling2(static_cast<unsigned long>(N + 1),
                           static_cast<unsigned long>(l + 1));
    if (l % 2 == 0) c = -c;  // (-1)^{l+1}
    acc = add(acc,
              mul(Ball::from_int(c, p), g_coefficient(M, l, e, p).value, p), p);
  }
  return add(acc, thm22_rhs(M, v, p), p);
}

IdentityReport check_eq22(const ExactRational& z, GammaSign sign,
                          const Precision& p, const Mag& eps, long term_cap,
                          int max_doublings) {
  if (!(z > 0 && z < 1))
    throw std::invalid_argument("check_eq22: z in (0,1) required");
  validate(p);
  const Mag z_ub = Mag::from_mpq_abs(z);

  auto lhs_sum = [&](const Precision& pp) {
    ExactRational zk = 1;  // z^k, advanced in step with the term index
    auto term = [&, z](long k, const Precision& q) {
      Ball t = mul(zeta_int(k + 2, q), Ball::from_rational(zk, q), q);
      zk *= z;
      return t;
    };
    auto tail = [&z_ub](long K) {
      // sum_{k>=K} zeta(k+2) z^k <= 2 z^K / (1-z)
      return Mag::div_ub_lb(
          Mag::mul(Mag::from_ui(2),
                   Mag::pow_ui(z_ub, static_cast<unsigned long>(K))),
          Mag::sub_lb(Mag::from_ui(1), z_ub));
    };
    return certified_sum(term, tail, pp, eps, term_cap, "check_eq22");
  };

  auto rhs_closed = [&](const Precision& pp) {
    Ball x = Ball::from_rational(ExactRational(1) - z, pp);
    Ball t = neg(polygamma(0, x, pp));
    Ball g = euler_gamma(pp);
    t = (sign == GammaSign::plus_gamma) ? add(t, g, pp) : sub(t, g, pp);
    return Summed{div(t, Ball::from_rational(z, pp), pp), 0};
  };

  EvalOut lhs = eval_adaptive(lhs_sum, eps, p, max_doublings);
  EvalOut rhs = eval_adaptive(rhs_closed, eps, p, max_doublings);
  Variant v = (sign == GammaSign::plus_gamma) ? Variant::as_printed
                                              : Variant::corrected_candidate;
  return finish_report("eq22", {{"z", q_str(z)}, {"sign", to_string(sign)}}, v,
                       lhs, rhs, p.guard);
}

IdentityReport check_eq25(long N, const ExactRational& a,
                          const ExactRational& z, const Precision& p,
                          const Mag& eps, long term_cap, int max_doublings) {
  if (N < 1) throw std::invalid_argument("check_eq25: N >= 1 required");
  if (!(a > 0 && a <= 2))
    throw std::invalid_argument("check_eq25: a in (0,2] required");
  if (!(abs(z) < a))
    throw std::invalid_argument("check_eq25: |z| < a required");
  ExactRational shifted = a - z;
  if (!(shifted > 0 && shifted < 4))
    throw DomainError("check_eq25: a - z must lie in (0,4)");
  validate(p);

  const Mag z_abs = Mag::from_mpq_abs(z);
  const bool small_a = (a < 1);
  const Mag za_ratio =
      small_a ? Mag::div_ub_lb(z_abs, Mag::from_mpq_abs_lb(a)) : Mag::zero();

  auto lhs_sum = [&](const Precision& pp) {
    Ball a_ball = Ball::from_rational(a, pp);
    ExactRational zk = pow_q(z, 2);  // z^k starting at k = 2
    auto term = [&, z, N](long n, const Precision& q) {
      const long k = n + 2;
      ExactInt kn;
      mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                    static_cast<unsigned long>(N));
      Ball t = mul(Ball::from_rational(ExactRational(kn) * zk, q),
                   hurwitz_zeta(k, a_ball, q), q);
      zk *= z;
      return t;
    };
    auto tail = [&](long n) {
      // zeta(k,a) <= 2 for a >= 1; for a < 1 add the a^{-k} spike.
      const long k0 = n + 2;
      Mag t = Mag::mul(Mag::from_ui(2), poly_geom_tail(k0, N, z_abs));
      if (small_a) t = Mag::add(t, poly_geom_tail(k0, N, za_ratio));
      return t;
    };
    return certified_sum(term, tail, pp, eps, term_cap, "check_eq25");
  };

  auto rhs_closed = [&](const Precision& pp) {
    Ball acc = Ball::zero(pp);
    Ball shift_ball = Ball::from_rational(shifted, pp);
    for (long l = 1; l <= N; ++l) {
      ExactInt c = stirling2(static_cast<unsigned long>(N + 1),
                             static_cast<unsigned long>(l + 1)) *
                   factorial(static_cast<unsigned long>(l));
      Ball t = mul(Ball::from_rational(ExactRational(c) * pow_q(z, l + 1), pp),
                   hurwitz_zeta(l + 1, shift_ball, pp), pp);
      acc = add(acc, t, pp);
    }
    Ball dpsi = sub(polygamma(0, shift_ball, pp),
                    polygamma(0, Ball::from_rational(a, pp), pp), pp);
    acc = sub(acc, mul(Ball::from_rational(z, pp), dpsi, pp), pp);
    return Summed{acc, 0};
  };

  EvalOut lhs = eval_adaptive(lhs_sum, eps, p, max_doublings);
  EvalOut rhs = eval_adaptive(rhs_closed, eps, p, max_doublings);
  return finish_report(
      "eq25",
      {{"N", std::to_string(N)}, {"a", q_str(a)}, {"z", q_str(z)}},
      Variant::as_printed, lhs, rhs, p.guard);
}

IdentityReport check_eq28(long N, const ExactRational& z) {
  if (N < 1) throw std::invalid_argument("check_eq28: N >= 1 required");
  if (!(abs(z) < 1))
    throw std::invalid_argument("check_eq28: |z| < 1 required");

  // Left side: (z d/dz)^N 1/(1-z), evaluated exactly.
  ExactRational lhs_exact = power_sum_fraction(
      static_cast<unsigned long>(N)).eval(z);
  // Right side: sum_{l=0}^{N} S(N+1,l+1) l! z^{l+1} / (1-z)^{l+1}.
  ExactRational w = z / (ExactRational(1) - z);
  ExactRational rhs_exact = 0;
  for (long l = 0; l <= N; ++l)
    rhs_exact += ExactRational(stirling2(static_cast<unsigned long>(N + 1),
                                         static_cast<unsigned long>(l + 1)) *
                               factorial(static_cast<unsigned long>(l))) *
                 pow_q(w, static_cast<unsigned long>(l + 1));

  const Precision render{320, 0};
  IdentityReport r;
  r.identity_id = "eq28";
  r.params = {{"N", std::to_string(N)},
              {"z", q_str(z)},
              {"lhs_exact", lhs_exact.get_str()},
              {"rhs_exact", rhs_exact.get_str()}};
  r.variant = Variant::corrected_candidate;
  r.lhs = Ball::from_rational(lhs_exact, render);
  r.rhs = Ball::from_rational(rhs_exact, render);
  r.verdict = (lhs_exact == rhs_exact) ? Verdict::pass : Verdict::fail;
  r.gap = ball_gap(r.lhs, r.rhs);
  r.terms_used = 0;
  r.prec_bits = render.bits;
  return r;
}

IdentityReport check_eq211(long N, const ExactRational& z, const Precision& p,
                           const Mag& eps, long term_cap, int max_doublings) {
  if (N < 1) throw std::invalid_argument("check_eq211: N >= 1 required");
  if (!(z > 0 && z < 1))
    throw std::invalid_argument("check_eq211: z in (0,1) required");
  validate(p);
  const Mag half_z = Mag::from_mpq_abs(z).mul_2si(-1);

  auto lhs_sum = [&](const Precision& pp) {
    ExactRational zk = pow_q(z, 2);
    auto term = [&, z, N](long n, const Precision& q) {
      const long k = n + 2;
      ExactInt kn;
      mpz_ui_pow_ui(kn.get_mpz_t(), static_cast<unsigned long>(k),
                    static_cast<unsigned long>(N));
      Ball t = mul(Ball::from_rational(ExactRational(kn) * zk, q),
                   zeta_minus_one(k, q), q);
      zk *= z;
      return t;
    };
    auto tail = [&](long n) {
      // zeta(k)-1 <= 3 * 2^{-k}
      return Mag::mul(Mag::from_ui(3), poly_geom_tail(n + 2, N, half_z));
    };
    return certified_sum(term, tail, pp, eps, term_cap, "check_eq211");
  };

  auto rhs_closed = [&](const Precision& pp) {
    Ball acc = Ball::zero(pp);
    Ball two_minus = Ball::from_rational(ExactRational(2) - z, pp);
    for (long l = 1; l <= N; ++l) {
      ExactInt c = stirling2(static_cast<unsigned long>(N + 1),
                             static_cast<unsigned long>(l + 1));
      if (l % 2 == 0) c = -c;  // (-1)^{l+1}
      Ball t = mul(Ball::from_rational(ExactRational(c) * pow_q(z, l + 1), pp),
                   polygamma(l, two_minus, pp), pp);
      acc = add(acc, t, pp);
    }
    Ball z_ball = Ball::from_rational(z, pp);
    acc = add(acc, z_ball, pp);
    acc = sub(acc,
              div(z_ball, Ball::from_rational(ExactRational(1) - z, pp), pp),
              pp);
    Ball psi_part =
        add(polygamma(0, Ball::from_rational(ExactRational(1) - z, pp), pp),
            euler_gamma(pp), pp);
    acc = sub(acc, mul(z_ball, psi_part, pp), pp);
    return Summed{acc, 0};
  };

  EvalOut lhs = eval_adaptive(lhs_sum, eps, p, max_doublings);
  EvalOut rhs = eval_adaptive(rhs_closed, eps, p, max_doublings);
  return finish_report("eq211", {{"N", std::to_string(N)}, {"z", q_str(z)}},
                       Variant::as_printed, lhs, rhs, p.guard);
}

LemmaBatch run_lemma_batch(unsigned long count, unsigned long seed,
                           long max_degree) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> deg_dist(0, max_degree);
  std::uniform_int_distribution<long> num_dist(-100, 100);
  std::uniform_int_distribution<long> den_dist(1, 100);
  LemmaBatch out;
  for (unsigned long i = 0; i < count; ++i) {
    const long deg = deg_dist(rng);
    std::vector<ExactRational> coeffs(deg + 1);
    for (auto& c : coeffs) c = make_rational(num_dist(rng), den_dist(rng));
    ExactPoly poly(std::move(coeffs));
    for (long M = 1; M <= deg + 1; ++M) {
      ++out.checks;
      if (lemma21_check(poly, M).equal) ++out.equal;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// suite driver

namespace {

void run_jobs(std::vector<std::function<void()>>& jobs, int nthreads) {
  if (nthreads <= 1 || jobs.size() <= 1) {
    for (auto& j : jobs) j();
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      jobs[i]();
    }
  };
  const size_t n = std::min<size_t>(static_cast<size_t>(nthreads), jobs.size());
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (size_t i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

IdentityReport guarded(const std::string& id, Params params, Variant v,
                       const std::function<IdentityReport()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    IdentityReport r;
    r.identity_id = id;
    r.params = std::move(params);
    r.params.emplace_back("error", e.what());
    r.variant = v;
    r.verdict = Verdict::inconclusive;
    return r;
  }
}

std::string param_sort_key(const IdentityReport& r) {
  std::string key;
  for (const auto& [name, value] : r.params) {
    key += name;
    key += '=';
    ExactRational q;
    if (mpq_set_str(q.get_mpq_t(), value.c_str(), 10) == 0 &&
        q.get_den() != 0) {
      q.canonicalize();
      char buf[48];
      std::snprintf(buf, sizeof(buf), "%024.9f", q.get_d());
      key += buf;
    } else {
      key += value;
    }
    key += ';';
  }
  return key;
}

bool row_less(const IdentityReport& a, const IdentityReport& b) {
  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
  const std::string ka = param_sort_key(a), kb = param_sort_key(b);
  if (ka != kb) return ka < kb;
  return to_string(a.variant) < to_string(b.variant);
}

bool id_selected(const SuiteConfig& cfg, const char* id) {
  if (cfg.only.empty()) return true;
  return fnmatch(cfg.only.c_str(), id, 0) == 0;
}

bool variant_selected(const SuiteConfig& cfg, Variant v) {
  return !cfg.variant_filter || *cfg.variant_filter == v;
}

// All rows of `id` and `v` exist and pass.
bool grid_validated(const std::vector<IdentityReport>& rows,
                    const std::string& id, Variant v) {
  long seen = 0;
  for (const auto& r : rows) {
    if (r.identity_id != id || r.variant != v) continue;
    ++seen;
    if (r.verdict != Verdict::pass) return false;
  }
  return seen > 0;
}

std::string validated_label(const std::vector<IdentityReport>& rows,
                            const std::string& id) {
  const bool printed = grid_validated(rows, id, Variant::as_printed);
  const bool corrected =
      grid_validated(rows, id, Variant::corrected_candidate);
  if (printed && corrected) return "both";
  if (printed) return "as_printed";
  if (corrected) return "corrected_candidate";
  return "unresolved";
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  const Precision prec = cfg.precision();
  validate(prec);
  const Mag eps = Mag::parse(cfg.eps);
  const long cap = cfg.term_cap;
  const int dbl = cfg.max_doublings;

  std::vector<std::function<IdentityReport()>> tasks;

  if (id_selected(cfg, "goldbach") &&
      variant_selected(cfg, Variant::as_printed))
    tasks.push_back([=] {
      return guarded("goldbach", {}, Variant::as_printed,
                     [&] { return goldbach(prec, eps, cap, dbl); });
    });

  if (id_selected(cfg, "telescope") &&
      variant_selected(cfg, Variant::as_printed)) {
    for (int weighted = 0; weighted <= 1; ++weighted) {
      tasks.push_back([=] {
        Params params = {{"weight", weighted ? "k" : "1"}};
        return guarded("telescope", params, Variant::as_printed, [&] {
          DirichletSpec spec;
          spec.sigma = 1;
          spec.a_seq = [weighted](long n, const Precision& pp) {
            return weighted ? Ball::from_long(n + 2, pp) : Ball::one(pp);
          };
          spec.L_minus_one = [](long s, const Precision& pp) {
            return zeta_minus_one(s, pp);
          };
          spec.tail_bound = [weighted](long N) {
            return zeta_family_tail(1, weighted ? 1 : 0, N);
          };
          EvalOut lhs = eval_adaptive(
              [&](const Precision& pp) {
                return dirichlet_tail_sum(spec, pp, eps, cap);
              },
              eps, prec, dbl);
          EvalOut rhs{weighted ? add(Ball::one(prec), zeta_int(2, prec), prec)
                               : Ball::one(prec),
                      0, true};
          return finish_report("telescope", params, Variant::as_printed, lhs,
                               rhs, prec.guard);
        });
      });
    }
  }

  if (id_selected(cfg, "thm22")) {
    for (long M : cfg.m_grid)
      for (Variant v : {Variant::as_printed, Variant::corrected_candidate}) {
        if (!variant_selected(cfg, v)) continue;
        tasks.push_back([=] {
          Params params = {{"M", std::to_string(M)}};
          return guarded("thm22", params, v, [&] {
            EvalOut lhs = eval_adaptive(
                [&](const Precision& pp) {
                  return thm22_lhs(M, pp, eps, cap);
                },
                eps, prec, dbl);
            EvalOut rhs = eval_adaptive(
                [&](const Precision& pp) {
                  return Summed{thm22_rhs(M, v, pp), 0};
                },
                eps, prec, dbl);
            return finish_report("thm22", params, v, lhs, rhs, prec.guard);
          });
        });
      }
  }

  if (id_selected(cfg, "thm23")) {
    for (long M : cfg.m23_grid)
      for (long N : cfg.n_grid)
        for (Variant v : {Variant::as_printed, Variant::corrected_candidate}) {
          if (!variant_selected(cfg, v)) continue;
          tasks.push_back([=] {
            Params params = {{"M", std::to_string(M)},
                             {"N", std::to_string(N)}};
            return guarded("thm23", params, v, [&] {
              EvalOut lhs = eval_adaptive(
                  [&](const Precision& pp) {
                    return thm23_lhs(M, N, pp, eps, cap);
                  },
                  eps, prec, dbl);
              EvalOut rhs = eval_adaptive(
                  [&](const Precision& pp) {
                    return Summed{thm23_rhs(M, N, v, pp), 0};
                  },
                  eps, prec, dbl);
              return finish_report("thm23", params, v, lhs, rhs, prec.guard);
            });
          });
        }
  }

  if (id_selected(cfg, "eq22")) {
    for (const auto& z : cfg.z_grid) {
      if (!(z > 0 && z < 1)) continue;
      for (GammaSign s : {GammaSign::plus_gamma, GammaSign::minus_gamma}) {
        Variant v = (s == GammaSign::plus_gamma)
                        ? Variant::as_printed
                        : Variant::corrected_candidate;
        if (!variant_selected(cfg, v)) continue;
        tasks.push_back([=] {
          Params params = {{"z", q_str(z)}, {"sign", to_string(s)}};
          return guarded("eq22", params, v, [&] {
            return check_eq22(z, s, prec, eps, cap, dbl);
          });
        });
      }
    }
  }

  if (id_selected(cfg, "eq25") && variant_selected(cfg, Variant::as_printed)) {
    for (long N : cfg.n25_grid)
      for (const auto& a : cfg.a25_grid)
        for (const auto& z : cfg.z25_grid)
          tasks.push_back([=] {
            Params params = {{"N", std::to_string(N)},
                             {"a", q_str(a)},
                             {"z", q_str(z)}};
            return guarded("eq25", params, Variant::as_printed, [&] {
              return check_eq25(N, a, z, prec, eps, cap, dbl);
            });
          });
  }

  if (id_selected(cfg, "eq28") &&
      variant_selected(cfg, Variant::corrected_candidate)) {
    for (long N : cfg.n28_grid)
      for (const auto& z : cfg.z28_grid)
        tasks.push_back([=] {
          Params params = {{"N", std::to_string(N)}, {"z", q_str(z)}};
          return guarded("eq28", params, Variant::corrected_candidate,
                         [&] { return check_eq28(N, z); });
        });
  }

  if (id_selected(cfg, "eq211") &&
      variant_selected(cfg, Variant::as_printed)) {
    for (long N : cfg.n_grid)
      for (const auto& z : cfg.z_grid) {
        if (!(z > 0 && z < 1)) continue;
        tasks.push_back([=] {
          Params params = {{"N", std::to_string(N)}, {"z", q_str(z)}};
          return guarded("eq211", params, Variant::as_printed, [&] {
            return check_eq211(N, z, prec, eps, cap, dbl);
          });
        });
      }
  }

  if (id_selected(cfg, "lemma21_batch") &&
      variant_selected(cfg, Variant::as_printed)) {
    tasks.push_back([=] {
      Params params = {{"count", std::to_string(cfg.lemma_count)},
                       {"seed", std::to_string(cfg.lemma_seed)},
                       {"max_degree", "12"}};
      return guarded("lemma21_batch", params, Variant::as_printed, [&] {
        LemmaBatch b = run_lemma_batch(cfg.lemma_count, cfg.lemma_seed);
        Params full = params;
        full.emplace_back("checks", std::to_string(b.checks));
        EvalOut lhs{Ball::from_long(b.equal, prec), b.checks, true};
        EvalOut rhs{Ball::from_long(b.checks, prec), 0, true};
        return finish_report("lemma21_batch", full, Variant::as_printed, lhs,
                             rhs, prec.guard);
      });
    });
  }

  std::vector<IdentityReport> rows(tasks.size());
  std::vector<std::function<void()>> jobs;
  jobs.reserve(tasks.size());
  for (size_t i = 0; i < tasks.size(); ++i)
    jobs.push_back([&rows, &tasks, i] { rows[i] = tasks[i](); });
  run_jobs(jobs, cfg.jobs);

  SuiteResult result;
  result.rows = std::move(rows);

  // Variant promotion feeds the consistency rows, so resolve it first.
  result.summary.thm22_validated = validated_label(result.rows, "thm22");
  result.summary.thm23_validated = validated_label(result.rows, "thm23");
  {
    const bool plus = grid_validated(result.rows, "eq22", Variant::as_printed);
    const bool minus =
        grid_validated(result.rows, "eq22", Variant::corrected_candidate);
    if (plus && minus)
      result.summary.eq22_validated_sign = "both";
    else if (plus)
      result.summary.eq22_validated_sign = "plus_gamma";
    else if (minus)
      result.summary.eq22_validated_sign = "minus_gamma";
  }

  if (id_selected(cfg, "prop_consistency")) {
    Variant winner = Variant::corrected_candidate;
    if (result.summary.thm22_validated == "as_printed")
      winner = Variant::as_printed;
    if (variant_selected(cfg, winner)) {
      std::vector<std::function<IdentityReport()>> prop_tasks;
      for (long M : cfg.prop_m_grid)
        prop_tasks.push_back([=] {
          Params params = {{"M", std::to_string(M)}};
          return guarded("prop_consistency", params, winner, [&] {
            EvalOut lhs = eval_adaptive(
                [&](const Precision& pp) {
                  return abel_rhs_sum(zeta_sequence(M), M, pp, eps, cap);
                },
                eps, prec, dbl);
            EvalOut rhs = eval_adaptive(
                [&](const Precision& pp) {
                  return Summed{thm22_rhs(M, winner, pp), 0};
                },
                eps, prec, dbl);
            return finish_report("prop_consistency", params, winner, lhs, rhs,
                                 prec.guard);
          });
        });
      std::vector<IdentityReport> prop_rows(prop_tasks.size());
      std::vector<std::function<void()>> prop_jobs;
      for (size_t i = 0; i < prop_tasks.size(); ++i)
        prop_jobs.push_back(
            [&prop_rows, &prop_tasks, i] { prop_rows[i] = prop_tasks[i](); });
      run_jobs(prop_jobs, cfg.jobs);
      for (auto& r : prop_rows) result.rows.push_back(std::move(r));
    }
  }

  std::stable_sort(result.rows.begin(), result.rows.end(), row_less);
  for (const auto& r : result.rows) {
    switch (r.verdict) {
      case Verdict::pass:
        ++result.summary.pass;
        break;
      case Verdict::fail:
        ++result.summary.fail;
        break;
      default:
        ++result.summary.inconclusive;
    }
  }
  return result;
}

}  // namespace abelzeta
