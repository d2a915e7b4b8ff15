#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "curvop/bivector.hpp"
#include "curvop/bounds.hpp"
#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"
#include "curvop/model_zoo.hpp"
#include "curvop/oracles.hpp"
#include "curvop/ricci_k.hpp"
#include "test_util.hpp"

using namespace curvop;
namespace ct = curvop::testing;

TEST_CASE("lemma32_bound: worked examples") {
  const BoundCheck a = lemma32_bound({-2, 1, 1}, 1);
  CHECK(a.lhs == doctest::Approx(-2.0));
  CHECK(a.rhs == doctest::Approx(-2.0));
  CHECK(a.holds);
  REQUIRE(a.equality_case.has_value());
  CHECK(*a.equality_case == "two-level");

  const BoundCheck z = lemma32_bound({0, 0, 0}, 2);
  REQUIRE(z.equality_case.has_value());
  CHECK(*z.equality_case == "all-zero");

  const BoundCheck b = lemma32_bound({-1, 0, 1}, 1);
  CHECK(b.lhs == doctest::Approx(-1.0));
  CHECK(b.rhs == doctest::Approx(-std::sqrt(4.0 / 3.0)));
  CHECK(b.holds);
  CHECK(!b.equality_case.has_value());

  CHECK_THROWS_AS(lemma32_bound({-3, 1, 1}, 1), PreconditionError);
  CHECK_THROWS_AS(lemma32_bound({1, -1, 0}, 1), PreconditionError);
  CHECK_THROWS_AS(lemma32_bound({-2, 1, 1}, 0), RangeError);
}

TEST_CASE("lemma32_bound: random suite and equality families") {
  const OracleResult r = oracle_lemma32(5000, 1);
  CHECK(r.failures == 0);
  CHECK(r.worst_slack >= -1e-9);
}

TEST_CASE("eigen_sum_subadditivity: examples and property") {
  SquareMatrix a(2), b(2);
  a(0, 0) = 1;
  a(1, 1) = 2;
  b(0, 0) = 2;
  b(1, 1) = 1;
  const auto [lower, upper] = eigen_sum_subadditivity(a, b, 1);
  CHECK(lower.lhs == doctest::Approx(3.0));
  CHECK(lower.rhs == doctest::Approx(2.0));
  CHECK(lower.holds);
  CHECK(upper.holds);

  // B = 0: equality on both sides.
  const auto [le, ue] = eigen_sum_subadditivity(a, SquareMatrix(2), 2);
  CHECK(le.slack == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ue.slack == doctest::Approx(0.0).epsilon(1e-12));

  const OracleResult r = oracle_lemma31(500, 3);
  CHECK(r.failures == 0);
  CHECK(r.worst_slack >= -1e-9);

  CHECK_THROWS_AS(eigen_sum_subadditivity(SquareMatrix(2), SquareMatrix(3), 1),
                  DimensionError);
}

TEST_CASE("ky_fan_check: trivial and extremal cases") {
  Rng rng(4);
  const SquareMatrix a = ct::random_symmetric(5, rng);
  // k = N: every orthonormal basis gives the trace.
  const BoundCheck full = ky_fan_check(a, 5, 32, 9);
  CHECK(full.lhs == doctest::Approx(a.trace()).epsilon(1e-10));
  CHECK(full.rhs == doctest::Approx(a.trace()).epsilon(1e-10));
  CHECK(full.holds);

  const OracleResult r = oracle_kyfan(200, 5);
  CHECK(r.failures == 0);
  CHECK(r.worst_slack >= -1e-9);
}

TEST_CASE("concentration_check: examples and property") {
  SquareMatrix iso = SquareMatrix::identity(4);
  iso *= 2.5;
  for (const BoundCheck& c : concentration_check(iso)) {
    CHECK(c.lhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.holds);
  }

  SquareMatrix pm(2);
  pm(0, 0) = 1;
  pm(1, 1) = -1;
  for (const BoundCheck& c : concentration_check(pm)) {
    CHECK(c.lhs == doctest::Approx(1.0));
    CHECK(c.rhs == doctest::Approx(1.0));
    CHECK(c.holds);
  }

  const OracleResult r = oracle_concentration(500, 6);
  CHECK(r.failures == 0);
  CHECK(r.worst_slack >= -1e-9);
}

TEST_CASE("threshold: pinned values") {
  CHECK(threshold(ThresholdKind::cor34, 4, 1) == doctest::Approx(std::sqrt(1.2)));
  CHECK(threshold(ThresholdKind::thm14, 4) == doctest::Approx(std::sqrt(1.2)));
  CHECK(threshold(ThresholdKind::gb4) == doctest::Approx(78.95683520871486));
  CHECK(threshold(ThresholdKind::thm15, 5, 1) ==
        doctest::Approx(std::sqrt(10.0 / 9.0) * 0.6));
  CHECK(threshold(ThresholdKind::thm16, 8, 2) ==
        doctest::Approx(std::sqrt(28.0 * 2 / 26.0) / 56.0));
  CHECK(threshold(ThresholdKind::cor17, 4, 1) ==
        doctest::Approx(2.0 / 48.0 * std::sqrt(5.0 / 6.0)));
  CHECK(threshold(ThresholdKind::thm19_gap2, 8) ==
        doctest::Approx(1.0 / (4.0 * 7.0)));
  // gap1 takes the smaller of the plain and damped coefficients.
  CHECK(threshold(ThresholdKind::thm19_gap1, 4, 1) ==
        doctest::Approx(std::sqrt(6.0 / 5.0) / 3.0));
}

TEST_CASE("threshold: the two dimension readings agree exactly at k=1") {
  for (int m = 4; m <= 20; ++m)
    CHECK(std::fabs(threshold(ThresholdKind::thm14, m) -
                    threshold(ThresholdKind::cor34, m, 1)) < 1e-15);
}

TEST_CASE("threshold: range errors") {
  CHECK_THROWS_AS(threshold(ThresholdKind::thm14, 2), RangeError);
  CHECK_THROWS_AS(threshold(ThresholdKind::cor34, 4, 0), RangeError);
  CHECK_THROWS_AS(threshold(ThresholdKind::cor34, 4, 6), RangeError);
  CHECK_THROWS_AS(threshold_kind_from_string("nope"), RangeError);
  CHECK(threshold_kind_from_string("gb4") == ThresholdKind::gb4);
}

TEST_CASE("lemma44_check: examples and exhaustive range") {
  const BoundCheck a = lemma44_check(8, 1);
  CHECK(a.lhs == doctest::Approx(1.0 + 1.0 / 7.0));
  CHECK(a.rhs == doctest::Approx(28.0 / 48.0));
  CHECK(a.slack == doctest::Approx(0.5595).epsilon(1e-3));
  CHECK(a.holds);

  const BoundCheck b = lemma44_check(8, 2);
  CHECK(b.lhs == doctest::Approx(1.0 + 1.0 / 6.0));
  CHECK(b.rhs == doctest::Approx(1.0));
  CHECK(b.holds);

  const OracleResult r = oracle_lemma44();
  CHECK(r.failures == 0);

  CHECK_THROWS_AS(lemma44_check(7, 1), RangeError);
  CHECK_THROWS_AS(lemma44_check(8, 3), RangeError);
}

TEST_CASE("prop33_bounds and prop46_bound: worked values") {
  const auto [lo_sf, hi_sf] = prop33_bounds(1.0, 0.0, 4, 1);
  CHECK(lo_sf == doctest::Approx(1.0));
  CHECK(hi_sf == doctest::Approx(1.0));

  // S2 x S2 with a = min sec = 0.
  const double w = std::sqrt(16.0 / 3.0);
  const auto [lo, hi] = prop33_bounds(0.0, w, 4, 1);
  CHECK(lo == doctest::Approx(-std::sqrt(5.0 / 6.0) * w));
  CHECK(lo == doctest::Approx(-2.1081851067789197).epsilon(1e-10));
  CHECK(hi == doctest::Approx(-lo));

  // Just inside the cor34 radius the lower bound is positive.
  const double eps = 1e-6;
  const auto [lo_pos, hi_pos] = prop33_bounds(1.0, std::sqrt(6.0 / 5.0) - eps, 4, 1);
  CHECK(lo_pos > 0.0);
  (void)hi_pos;

  CHECK(prop46_bound(12.0, 0.0, 0.0, 4, 1) == doctest::Approx(1.0));
  CHECK(prop46_bound(4.0, 0.0, w, 4, 1) ==
        doctest::Approx(1.0 / 3.0 - std::sqrt(5.0 / 6.0) * w));
  CHECK(prop46_bound(0.0, 0.0, 0.0, 4, 2) == 0.0);
  CHECK_THROWS_AS(prop46_bound(1.0, 0.0, 0.0, 3, 1), DimensionError);
  CHECK_THROWS_AS(prop33_bounds(1.0, -1.0, 4, 1), PreconditionError);
}

TEST_CASE("prop46_bound: below every lowest-k eigenvalue sum") {
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 4 + seed % 3;
    const CurvatureTensor rm =
        random_curvature(n, 2000 + seed, 0.7, 0.9, (seed % 5 - 2) * 3.0);
    const DecomposedCurvature d = orthogonal_decompose(rm);
    const double w = std::sqrt(d.weyl.full_norm_sq());
    const double r0 = std::sqrt(d.traceless_ricci.full_norm_sq());
    const SpectralSummary s = spectrum(curvature_operator(rm, Frame::standard(n)));
    const int big_n = n * (n - 1) / 2;
    for (int k = 1; k <= big_n; ++k)
      CHECK(s.prefix(k) >= prop46_bound(d.scalar, r0, w, n, k) - 1e-9);
  }
}

TEST_CASE("prop33_bounds: sandwich with diagonal-sum curvature levels") {
  // Lower/upper levels from the k smallest/largest diagonal sectional sums in
  // the Ricci eigenframe; the zero-sum machinery then brackets the spectrum.
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 4 + seed % 3;
    const CurvatureTensor rm =
        random_curvature(n, 3000 + seed, 0.6, 1.1, (seed % 3) * 2.0);
    const Theorem12Blocks blocks = theorem12_blocks(rm);
    const BivectorMatrix op = curvature_operator(rm, blocks.frame);
    const SpectralSummary s = spectrum(op);
    const DecomposedCurvature d = orthogonal_decompose(rm);
    const double w = std::sqrt(d.weyl.full_norm_sq());
    const int big_n = op.index().count();

    std::vector<double> diag(big_n);
    for (int a = 0; a < big_n; ++a) diag[a] = op.entries()(a, a);
    std::sort(diag.begin(), diag.end());

    for (int k = 1; k <= n - 1; ++k) {
      double low_sum = 0.0, high_sum = 0.0;
      for (int i = 0; i < k; ++i) {
        low_sum += diag[i];
        high_sum += diag[big_n - 1 - i];
      }
      const auto [lo, unused] = prop33_bounds(low_sum / k, w, n, k);
      (void)unused;
      const auto [unused2, hi] = prop33_bounds(high_sum / k, w, n, k);
      (void)unused2;
      CHECK(s.prefix(k) >= lo - 1e-9);
      double top = 0.0;
      for (int i = 0; i < k; ++i) top += s.eigenvalues[big_n - 1 - i];
      CHECK(top <= hi + 1e-9);
      CHECK(s.prefix(k) <= hi + 1e-9);
    }
  }
}
