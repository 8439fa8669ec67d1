// SPDX-License-Identifier: Apache-2.0
//
// The identity catalogue: each check pairs an independent direct-summation
// side with a closed-form side, evaluates as-printed and candidate-corrected
// variants where the source formulas are internally inconsistent, and emits
// machine-readable verdicts.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelzeta/abel.hpp"
#include "abelzeta/ball.hpp"
#include "abelzeta/exact.hpp"

namespace abelzeta {

enum class Variant { as_printed, corrected_candidate };
enum class Verdict { pass, fail, inconclusive };
enum class GammaSign { plus_gamma, minus_gamma };

std::string to_string(Variant v);
std::string to_string(Verdict v);
std::string to_string(GammaSign s);
std::optional<Variant> variant_from_string(const std::string& s);

struct IdentityReport {
  std::string identity_id;
  // Ordered (name, value) pairs; values are integers or rationals as text.
  std::vector<std::pair<std::string, std::string>> params;
  Variant variant = Variant::as_printed;
  Ball lhs;
  Ball rhs;
  Verdict verdict = Verdict::inconclusive;
  Real gap;
  long terms_used = 0;
  long prec_bits = 0;
};

struct GCoefficient {
  long M = 0;
  long l = 0;
  long e = 0;
  Ball value;
};

struct SuiteConfig {
  long prec_bits = 256;
  long guard = 16;
  std::string eps = "1e-40";
  std::vector<long> m_grid = {1, 2, 3, 4, 5, 6, 7, 8};   // thm22 M values
  std::vector<long> m23_grid = {1, 2, 3};                // thm23 M values
  std::vector<long> n_grid = {1, 2, 3};                  // thm23 / eq211 N
  std::vector<ExactRational> z_grid;                     // eq22 / eq211 z
  std::vector<long> n25_grid = {1, 2, 3};
  std::vector<ExactRational> a25_grid;
  std::vector<ExactRational> z25_grid;
  std::vector<long> n28_grid = {1, 2, 3, 4, 5, 6};
  std::vector<ExactRational> z28_grid;
  std::vector<long> prop_m_grid = {1, 2, 3, 4, 5, 6};
  unsigned long lemma_count = 1000;
  unsigned long lemma_seed = 0;
  long term_cap = kDefaultTermCap;
  int max_doublings = 10;
  std::string only;  // id glob filter, empty = everything
  std::optional<Variant> variant_filter;
  int jobs = 1;  // the constructor raises this to the available parallelism
  std::string format = "json";
  std::string out_path;

  SuiteConfig();  // fills the rational grid defaults
  Precision precision() const { return Precision{prec_bits, guard}; }
};

struct SuiteSummary {
  long pass = 0;
  long fail = 0;
  long inconclusive = 0;
  std::string thm22_validated = "unresolved";
  std::string thm23_validated = "unresolved";
  std::string eq22_validated_sign = "unresolved";
};

struct SuiteResult {
  std::vector<IdentityReport> rows;
  SuiteSummary summary;
};

// --- individual evaluators ---------------------------------------------

// The classical sum_{n>=0} (1 - zeta(n+2)) = -1 check.
IdentityReport goldbach(const Precision& p, const Mag& eps,
                        long term_cap = kDefaultTermCap,
                        int max_doublings = 10);

// sum_{n>=0} (n+1)_{M-1} (1 - zeta(n+M+1)) by direct summation.
Summed thm22_lhs(long M, const Precision& p, const Mag& eps,
                 long term_cap = kDefaultTermCap);

// Closed form: s1 sum_j C(M-1,j) j! psi^{(M-j-1)}(1) + (-1)^M (M-1)!
// + s2 gamma (M-1)!, with (s1, s2) = ((-1)^M, (-1)^M) as printed and
// ((-1)^{M+1}, (-1)^{M+1}) for the corrected candidate.
Ball thm22_rhs(long M, Variant v, const Precision& p);

// g_{M,l} with the z-exponent generalized to e:
// -sum_{j=0}^{min(M-1,e)} C(M-1,j) (-1)^{M-1-j} psi^{(l+M-1-j)}(1) e!/(e-j)!.
GCoefficient g_coefficient(long M, long l, long e, const Precision& p);

// sum_{n>=0} (n+1)_{M-1} (n+M+1)^N (1 - zeta(n+M+1)).
Summed thm23_lhs(long M, long N, const Precision& p, const Mag& eps,
                 long term_cap = kDefaultTermCap);

// sum_{l=1}^{N} S(N+1,l+1) (-1)^{l+1} g_{M,l,e} + thm22_rhs(M, v) with
// e = l+1 as printed and e = l-1 for the corrected candidate.
Ball thm23_rhs(long M, long N, Variant v, const Precision& p);

// Series sum_{k>=0} zeta(k+2) z^k against -psi(1-z)/z +/- gamma/z.
IdentityReport check_eq22(const ExactRational& z, GammaSign sign,
                          const Precision& p, const Mag& eps,
                          long term_cap = kDefaultTermCap,
                          int max_doublings = 10);

// sum_{k>=2} k^N z^k zeta(k,a) against the Stirling/Hurwitz closed form.
IdentityReport check_eq25(long N, const ExactRational& a,
                          const ExactRational& z, const Precision& p,
                          const Mag& eps, long term_cap = kDefaultTermCap,
                          int max_doublings = 10);

// Exact rational identity sum_{k>=1} k^N z^k =
// sum_{l=0}^{N} S(N+1,l+1) l! (1-z)^{-l-1} z^{l+1}; both sides exact, the
// left via the (z d/dz)^N operator closed form. No tolerance anywhere.
IdentityReport check_eq28(long N, const ExactRational& z);

// sum_{k>=2} k^N z^k (zeta(k)-1) against the psi^{(l)}(2-z) closed form.
IdentityReport check_eq211(long N, const ExactRational& z, const Precision& p,
                           const Mag& eps, long term_cap = kDefaultTermCap,
                           int max_doublings = 10);

// Seeded random-polynomial batch of lemma21_check; every (poly, M <= deg+1)
// pair is checked in exact arithmetic.
struct LemmaBatch {
  long checks = 0;
  long equal = 0;
};

LemmaBatch run_lemma_batch(unsigned long count, unsigned long seed,
                           long max_degree = 12);

// Full catalogue in canonical order; individual failures become fail or
// inconclusive rows, never aborts.
SuiteResult run_suite(const SuiteConfig& config);

}  // namespace abelzeta
