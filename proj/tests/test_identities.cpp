// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelzeta/identities.hpp"
#include "abelzeta/report.hpp"
#include "test_support.hpp"

using namespace abelzeta;
using namespace testsupport;

namespace {

const Mag& eps40() {
  static Mag e = Mag::parse("1e-40");
  return e;
}

Ball one_plus_zeta2(const Precision& p) {
  return add(Ball::one(p), zeta_oracle(2, p.work() + 40), p);
}

}  // namespace

TEST_CASE("goldbach row passes with a tight ball") {
  IdentityReport r = goldbach(P(256), Mag::parse("1e-50"));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.lhs.contains(ExactRational(-1)));
  CHECK(r.lhs.rad().leq(Mag::parse("1e-50")));
  CHECK(r.terms_used > 100);
}

TEST_CASE("goldbach with a huge eps passes trivially; tiny term cap is "
          "inconclusive") {
  IdentityReport wide = goldbach(P(64), Mag::parse("0.5"));
  CHECK(wide.verdict == Verdict::pass);

  IdentityReport capped = goldbach(P(128), Mag::parse("1e-20"), 3);
  CHECK(capped.verdict == Verdict::inconclusive);
}

TEST_CASE("thm22 closed forms at M = 1 and M = 2") {
  const Precision p = P(256);
  for (Variant v : {Variant::as_printed, Variant::corrected_candidate})
    CHECK(thm22_rhs(1, v, p).contains(ExactRational(-1)));

  Ball printed2 = thm22_rhs(2, Variant::as_printed, p);
  CHECK(overlaps(printed2, one_plus_zeta2(p)));
  Ball corrected2 = thm22_rhs(2, Variant::corrected_candidate, p);
  CHECK(overlaps(corrected2, sub(Ball::one(p), zeta_oracle(2, 300), p)));
}

TEST_CASE("thm22 discrimination: one variant wins the whole grid") {
  const Precision p = P(256);
  int corrected_wins = 0;
  for (long M = 2; M <= 8; ++M) {
    Summed lhs = thm22_lhs(M, p, eps40());
    Ball printed = thm22_rhs(M, Variant::as_printed, p);
    Ball corrected = thm22_rhs(M, Variant::corrected_candidate, p);
    const bool printed_hit = overlaps(lhs.value, printed);
    const bool corrected_hit = overlaps(lhs.value, corrected);
    REQUIRE(printed_hit != corrected_hit);  // exactly one survives
    if (corrected_hit) ++corrected_wins;
    // the loser misses by far more than ten combined radii
    const Ball& loser = printed_hit ? corrected : printed;
    Mag combined = Mag::add(lhs.value.rad(), loser.rad());
    Real gap = ball_gap(lhs.value, loser);
    Mag gap_mag = Mag::from_abs_lb(gap.raw());
    REQUIRE(Mag::mul(combined, Mag::from_ui(10)).cmp(gap_mag) < 0);
  }
  CHECK((corrected_wins == 0 || corrected_wins == 7));  // same winner always
  // both variants coincide with the sum at M = 1
  Summed lhs1 = thm22_lhs(1, p, eps40());
  CHECK(overlaps(lhs1.value, thm22_rhs(1, Variant::as_printed, p)));
  CHECK(overlaps(lhs1.value, thm22_rhs(1, Variant::corrected_candidate, p)));
}

TEST_CASE("g coefficients: hand-derived values") {
  const Precision p = P(192);
  GCoefficient a = g_coefficient(1, 1, 2, p);
  CHECK(overlaps(a.value, neg(zeta_int(2, p))));

  GCoefficient b = g_coefficient(2, 1, 2, p);
  Ball expect_b = neg(ldexp_ball(add(zeta_int(3, p), zeta_int(2, p), p), 1));
  CHECK(overlaps(b.value, expect_b));

  GCoefficient c = g_coefficient(2, 1, 0, p);
  CHECK(overlaps(c.value, neg(ldexp_ball(zeta_int(3, p), 1))));
}

TEST_CASE("thm23 at (1,1): both variants and the sum give -(1 + zeta(2))") {
  const Precision p = P(256);
  Summed lhs = thm23_lhs(1, 1, p, eps40());
  Ball expect = neg(one_plus_zeta2(p));
  CHECK(overlaps(lhs.value, expect));
  CHECK(overlaps(thm23_rhs(1, 1, Variant::as_printed, p), expect));
  CHECK(overlaps(thm23_rhs(1, 1, Variant::corrected_candidate, p), expect));
}

TEST_CASE("thm23 variants coincide at (2,1) but separate at (3,1) and (2,2)") {
  const Precision p = P(256);
  Ball p21 = thm23_rhs(2, 1, Variant::as_printed, p);
  Ball c21 = thm23_rhs(2, 1, Variant::corrected_candidate, p);
  CHECK(overlaps(p21, c21));

  for (auto [M, N] : {std::pair<long, long>{3, 1}, {2, 2}}) {
    Summed lhs = thm23_lhs(M, N, p, eps40());
    const bool printed_hit =
        overlaps(lhs.value, thm23_rhs(M, N, Variant::as_printed, p));
    const bool corrected_hit =
        overlaps(lhs.value, thm23_rhs(M, N, Variant::corrected_candidate, p));
    REQUIRE(corrected_hit);
    REQUIRE(!printed_hit);
  }
}

TEST_CASE("thm23 corrected candidate passes the whole {1,2,3}^2 grid") {
  const Precision p = P(256);
  for (long M = 1; M <= 3; ++M)
    for (long N = 1; N <= 3; ++N) {
      Summed lhs = thm23_lhs(M, N, p, eps40());
      REQUIRE(overlaps(lhs.value,
                       thm23_rhs(M, N, Variant::corrected_candidate, p)));
    }
}

TEST_CASE("eq22: the minus sign wins at every z and the gap is 2 gamma / z") {
  const Precision p = P(256);
  for (const auto& z : {make_rational(1, 64), make_rational(1, 4),
                        make_rational(1, 2)}) {
    IdentityReport minus = check_eq22(z, GammaSign::minus_gamma, p, eps40());
    IdentityReport plus = check_eq22(z, GammaSign::plus_gamma, p, eps40());
    REQUIRE(minus.verdict == Verdict::pass);
    REQUIRE(plus.verdict == Verdict::fail);
    // |gap - 2 gamma / z| <= combined radii (plus the gamma ball's own)
    Ball expected_gap =
        div(ldexp_ball(euler_gamma(p), 1), Ball::from_rational(z, p), p);
    Real diff(320);
    mpfr_sub(diff.raw(), plus.gap.raw(), expected_gap.mid().raw(), MPFR_RNDA);
    mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDU);
    Mag tol = Mag::add(Mag::add(plus.lhs.rad(), plus.rhs.rad()),
                       expected_gap.rad());
    REQUIRE(Mag::from_abs(diff.raw()).leq(tol));
  }
}

TEST_CASE("eq25 grid passes at 1e-30") {
  const Precision p = P(256);
  const Mag eps = Mag::parse("1e-30");
  for (long N : {1L, 2L, 3L})
    for (const auto& a : {make_rational(1, 1), make_rational(3, 2)})
      for (const auto& z : {make_rational(1, 4), make_rational(1, 2)}) {
        IdentityReport r = check_eq25(N, a, z, p, eps);
        REQUIRE(r.verdict == Verdict::pass);
      }
}

TEST_CASE("eq25 degenerate and error cases") {
  const Precision p = P(128);
  IdentityReport zero = check_eq25(2, make_rational(3, 2), ExactRational(0), p,
                                   Mag::parse("1e-20"));
  CHECK(zero.verdict == Verdict::pass);
  CHECK(zero.lhs.contains(ExactRational(0)));
  CHECK(zero.rhs.contains(ExactRational(0)));
  CHECK_THROWS(check_eq25(1, make_rational(1, 2), make_rational(3, 4), p,
                          Mag::parse("1e-10")));
}

TEST_CASE("eq28 is exact: anchors, grid, and a partial-sum bracket") {
  IdentityReport two = check_eq28(1, make_rational(1, 2));
  CHECK(two.verdict == Verdict::pass);
  CHECK(two.lhs.contains(ExactRational(2)));

  IdentityReport six = check_eq28(2, make_rational(1, 2));
  CHECK(six.verdict == Verdict::pass);
  CHECK(six.lhs.contains(ExactRational(6)));

  IdentityReport zero = check_eq28(3, ExactRational(0));
  CHECK(zero.verdict == Verdict::pass);
  CHECK(zero.lhs.contains(ExactRational(0)));

  for (long N = 1; N <= 6; ++N)
    for (const auto& z : {make_rational(1, 2), make_rational(1, 3),
                          make_rational(2, 3)})
      REQUIRE(check_eq28(N, z).verdict == Verdict::pass);

  // brute-force bracket: partial sums approach the closed value from below
  const long N = 3;
  const ExactRational z = make_rational(1, 3);
  ExactRational closed = power_sum_fraction(N).eval(z);
  ExactRational partial = 0, zk = 1;
  for (long k = 1; k <= 200; ++k) {
    zk *= z;
    partial += ExactRational(k * k * k) * zk;
  }
  CHECK(partial < closed);
  CHECK(closed - partial < make_rational(1, 1000000000));
}

TEST_CASE("eq211 passes across the sample grid") {
  const Precision p = P(256);
  for (long N : {1L, 3L})
    for (const auto& z : {make_rational(1, 64), make_rational(1, 4),
                          make_rational(1, 2)}) {
      IdentityReport r = check_eq211(N, z, p, eps40());
      REQUIRE(r.verdict == Verdict::pass);
    }
}

TEST_CASE("verdicts are recomputable from the stored balls") {
  const Precision p = P(192);
  const Mag eps = Mag::parse("1e-25");
  std::vector<IdentityReport> rows;
  rows.push_back(goldbach(p, eps));
  rows.push_back(check_eq22(make_rational(1, 2), GammaSign::plus_gamma, p,
                            eps));
  rows.push_back(check_eq22(make_rational(1, 2), GammaSign::minus_gamma, p,
                            eps));
  rows.push_back(check_eq28(2, make_rational(1, 3)));
  for (const auto& r : rows) {
    const bool hit = overlaps(r.lhs, r.rhs);
    if (r.verdict == Verdict::pass) CHECK(hit);
    if (r.verdict == Verdict::fail) CHECK(!hit);
  }
}

TEST_CASE("run_suite: goldbach alone") {
  SuiteConfig cfg;
  cfg.only = "goldbach";
  SuiteResult r = run_suite(cfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].identity_id == "goldbach");
  CHECK(r.rows[0].verdict == Verdict::pass);
  CHECK(r.summary.pass == 1);
}

TEST_CASE("run_suite: emptied grids produce no rows") {
  SuiteConfig cfg;
  cfg.only = "thm2*";
  cfg.m_grid.clear();
  cfg.m23_grid.clear();
  SuiteResult r = run_suite(cfg);
  CHECK(r.rows.empty());
}

TEST_CASE("run_suite determinism: jobs=1 and jobs=4 agree byte for byte") {
  SuiteConfig cfg;
  cfg.only = "eq2[28]*";  // eq22 + eq28 keep this quick
  cfg.prec_bits = 128;
  cfg.eps = "1e-20";
  SuiteConfig cfg4 = cfg;
  cfg4.jobs = 4;
  Json a = report_document(cfg, run_suite(cfg));
  Json b = report_document(cfg, run_suite(cfg4));
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("run_suite promotes the validated variants") {
  SuiteConfig cfg;
  cfg.prec_bits = 192;
  cfg.eps = "1e-25";
  cfg.m_grid = {1, 2, 3, 4};
  cfg.m23_grid = {1, 2, 3};
  cfg.n_grid = {1, 2};
  cfg.z_grid = {make_rational(1, 4), make_rational(1, 2)};
  cfg.n25_grid = {1};
  cfg.z25_grid = {make_rational(1, 4)};
  cfg.n28_grid = {1, 2};
  cfg.lemma_count = 50;
  SuiteResult r = run_suite(cfg);
  CHECK(r.summary.thm22_validated == "corrected_candidate");
  CHECK(r.summary.thm23_validated == "corrected_candidate");
  CHECK(r.summary.eq22_validated_sign == "minus_gamma");
  CHECK(r.summary.fail > 0);  // the as-printed rows
  CHECK(r.summary.inconclusive == 0);
  // eq22 winner and thm22 winner stem from the same sign choice
  CHECK(((r.summary.eq22_validated_sign == "minus_gamma") ==
         (r.summary.thm22_validated == "corrected_candidate")));
  // prop_consistency rows exist and pass with the winning variant
  long prop_rows = 0;
  for (const auto& row : r.rows)
    if (row.identity_id == "prop_consistency") {
      ++prop_rows;
      CHECK(row.verdict == Verdict::pass);
      CHECK(row.variant == Variant::corrected_candidate);
    }
  CHECK(prop_rows == static_cast<long>(cfg.prop_m_grid.size()));
}

TEST_CASE("adaptive loop doubles precision until the target radius is met") {
  IdentityReport r = goldbach(Precision{32, 16}, Mag::parse("1e-30"));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.prec_bits > 32);  // the 32-bit pass cannot reach 1e-30
  CHECK(r.lhs.rad().leq(Mag::parse("1e-30")));
  CHECK(r.lhs.contains(ExactRational(-1)));
}

TEST_CASE("direct-summation sides agree between 128 and 256 bits") {
  const Mag eps128 = Mag::parse("1e-20");
  for (long M : {1L, 4L, 8L}) {
    Summed lo = thm22_lhs(M, P(128), eps128);
    Summed hi = thm22_lhs(M, P(256), eps40());
    REQUIRE(overlaps(lo.value, hi.value));
  }
  Summed lo = thm23_lhs(3, 3, P(128), eps128);
  Summed hi = thm23_lhs(3, 3, P(256), eps40());
  CHECK(overlaps(lo.value, hi.value));
}
