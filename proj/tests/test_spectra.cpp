#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "curvop/bivector.hpp"
#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"
#include "curvop/model_zoo.hpp"
#include "test_util.hpp"

using namespace curvop;
namespace ct = curvop::testing;

namespace {

CurvatureTensor s2_x_s2() { return product({{2, 1.0}, {2, 1.0}}); }

}  // namespace

TEST_CASE("bivector index: lexicographic order and inverse") {
  const BivectorIndex idx(4);
  CHECK(idx.count() == 6);
  const std::pair<int, int> expected[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int a = 0; a < 6; ++a) {
    CHECK(idx.pair(a) == expected[a]);
    CHECK(idx.flat(expected[a].first, expected[a].second) == a);
  }
}

TEST_CASE("curvature_operator: examples") {
  const BivectorMatrix id_op = curvature_operator(space_form(4, 1.0), Frame::standard(4));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(id_op.entries()(a, b) == doctest::Approx(a == b ? 1.0 : 0.0));

  const BivectorMatrix prod_op = curvature_operator(s2_x_s2(), Frame::standard(4));
  const double want[6] = {1, 0, 0, 0, 0, 1};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(prod_op.entries()(a, b) == doctest::Approx(a == b ? want[a] : 0.0));

  const BivectorMatrix zero_op = curvature_operator(CurvatureTensor(4), Frame::standard(4));
  CHECK(zero_op.frobenius_sq() == 0.0);
}

TEST_CASE("curvature_operator: diagonal entries are frame-plane sectional curvatures") {
  Rng rng(5);
  const CurvatureTensor rm = symmetrize_random(17, 5);
  const Frame f(ct::random_orthogonal(5, rng));
  const CurvatureTensor rot = rotate(rm, f);
  const BivectorMatrix op = curvature_operator(rm, f);
  for (int a = 0; a < op.index().count(); ++a) {
    const auto [i, j] = op.index().pair(a);
    CHECK(op.entries()(a, a) == doctest::Approx(rot(i, j, i, j)).epsilon(1e-12));
  }
}

TEST_CASE("ricci_eigenframe: examples") {
  const auto [f_iso, l_iso] = ricci_eigenframe(SymTwoTensor::metric(4).scaled(3.0));
  for (double l : l_iso) CHECK(l == doctest::Approx(3.0));
  (void)f_iso;

  SymTwoTensor diag(3);
  diag.set(0, 0, 1.0);
  diag.set(1, 1, 2.0);
  diag.set(2, 2, 3.0);
  const auto [f, l] = ricci_eigenframe(diag);
  CHECK(l[0] == doctest::Approx(1.0));
  CHECK(l[2] == doctest::Approx(3.0));
  for (int i = 0; i < 3; ++i) CHECK(std::fabs(f(i, i)) == doctest::Approx(1.0));

  Rng rng(6);
  const SquareMatrix m = ct::random_symmetric(6, rng);
  const auto [frame, lambda] = ricci_eigenframe(SymTwoTensor::from_matrix(m));
  // frame * Ric * frame^T diagonal within 1e-9.
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s) {
      double v = 0.0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) v += frame(r, i) * m(i, j) * frame(s, j);
      CHECK(std::fabs(v - (r == s ? lambda[r] : 0.0)) < 1e-9);
    }
}

TEST_CASE("theorem12_blocks: space form and product") {
  const Theorem12Blocks sphere = theorem12_blocks(space_form(5, 1.0));
  for (int a = 0; a < 10; ++a)
    CHECK(sphere.schouten_block.entries()(a, a) == doctest::Approx(1.0));
  CHECK(sphere.weyl_block.frobenius_sq() < 1e-20);

  const Theorem12Blocks prod = theorem12_blocks(s2_x_s2());
  for (int a = 0; a < 6; ++a)
    CHECK(prod.schouten_block.entries()(a, a) == doctest::Approx(1.0 / 3.0));
  // Weyl block diagonal (2/3, -1/3, -1/3, -1/3, -1/3, 2/3) in pair order.
  const double want[6] = {2.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0};
  for (int a = 0; a < 6; ++a)
    CHECK(prod.weyl_block.entries()(a, a) == doctest::Approx(want[a]).epsilon(1e-12));
  CHECK(std::fabs(prod.weyl_block.trace()) < 1e-12);
}

TEST_CASE("theorem12_blocks: reconstruction on random tensors") {
  for (int seed = 0; seed < 10; ++seed) {
    const int n = 4 + seed % 3;
    const CurvatureTensor rm = symmetrize_random(500 + seed, n);
    const double scale = 1.0 + std::sqrt(rm.full_norm_sq());
    const Theorem12Blocks blocks = theorem12_blocks(rm);
    const BivectorMatrix op = curvature_operator(rm, blocks.frame);
    const int big_n = op.index().count();

    double r = 0.0;
    for (double l : blocks.ricci_eigenvalues) r += l;
    for (int a = 0; a < big_n; ++a) {
      const auto [i, j] = op.index().pair(a);
      const double lam_ij =
          (blocks.ricci_eigenvalues[i] + blocks.ricci_eigenvalues[j] - r / (n - 1)) / (n - 2);
      CHECK(std::fabs(blocks.schouten_block.entries()(a, a) - lam_ij) < 1e-12 * scale);
      for (int b = 0; b < big_n; ++b) {
        const double sum = blocks.schouten_block.entries()(a, b) +
                           blocks.weyl_block.entries()(a, b);
        CHECK(std::fabs(sum - op.entries()(a, b)) < 1e-9 * scale);
        // Off-diagonal operator entries are Weyl components in this frame.
        if (a != b)
          CHECK(std::fabs(op.entries()(a, b) - blocks.weyl_block.entries()(a, b)) <
                1e-9 * scale);
      }
    }
    CHECK(std::fabs(blocks.weyl_block.trace()) < 1e-9 * scale);
  }
}

TEST_CASE("spectrum: examples and trace identity") {
  const SpectralSummary s_id =
      spectrum(curvature_operator(space_form(4, 1.0), Frame::standard(4)));
  for (double v : s_id.eigenvalues) CHECK(v == doctest::Approx(1.0));

  const SpectralSummary s_prod = spectrum(curvature_operator(s2_x_s2(), Frame::standard(4)));
  const double want[6] = {0, 0, 0, 0, 1, 1};
  for (int i = 0; i < 6; ++i) CHECK(s_prod.eigenvalues[i] == doctest::Approx(want[i]));
  CHECK(s_prod.prefix(6) == doctest::Approx(2.0));

  Rng rng(8);
  const CurvatureTensor rm = symmetrize_random(77, 5);
  const BivectorMatrix op = curvature_operator(rm, Frame::standard(5));
  const SpectralSummary s = spectrum(op);
  CHECK(s.prefix_sums.back() == doctest::Approx(op.trace()).epsilon(1e-8));
}

TEST_CASE("spectrum: frame invariance") {
  Rng rng(12);
  const CurvatureTensor rm = symmetrize_random(88, 5);
  const SpectralSummary s1 = spectrum(curvature_operator(rm, Frame::standard(5)));
  for (int t = 0; t < 4; ++t) {
    const Frame f(ct::random_orthogonal(5, rng));
    const SpectralSummary s2 = spectrum(curvature_operator(rm, f));
    for (std::size_t i = 0; i < s1.eigenvalues.size(); ++i)
      CHECK(std::fabs(s1.eigenvalues[i] - s2.eigenvalues[i]) < 1e-8);
  }
}

TEST_CASE("norm bridge: |T|^2 = 4 ||matrix||_2^2") {
  for (int seed = 0; seed < 6; ++seed) {
    const int n = 4 + seed % 3;
    const CurvatureTensor rm = symmetrize_random(900 + seed, n);
    const BivectorMatrix op = curvature_operator(rm, Frame::standard(n));
    CHECK(rm.full_norm_sq() == doctest::Approx(4.0 * op.frobenius_sq()).epsilon(1e-11));

    // The same bridge holds for the Weyl part, so ||W-block||_2 <= |W|.
    const CurvatureTensor w = weyl(rm);
    const BivectorMatrix wop = curvature_operator(w, Frame::standard(n));
    CHECK(w.full_norm_sq() == doctest::Approx(4.0 * wop.frobenius_sq()).epsilon(1e-11));
    CHECK(std::sqrt(wop.frobenius_sq()) <= std::sqrt(w.full_norm_sq()) + 1e-12);
    CHECK(std::fabs(wop.trace()) < 1e-9 * (1.0 + std::sqrt(rm.full_norm_sq())));
  }
}

TEST_CASE("trace-free Ricci operator: Frobenius identity") {
  for (int seed = 0; seed < 6; ++seed) {
    const int n = 4 + seed % 3;
    const CurvatureTensor rm = symmetrize_random(950 + seed, n);
    const DecomposedCurvature d = orthogonal_decompose(rm);
    const CurvatureTensor ric0_part =
        kulkarni_nomizu(d.traceless_ricci, SymTwoTensor::metric(n)).scaled(1.0 / (n - 2));
    const BivectorMatrix m = curvature_operator(ric0_part, Frame::standard(n));
    CHECK(m.frobenius_sq() ==
          doctest::Approx(d.traceless_ricci.full_norm_sq() / (n - 2)).epsilon(1e-8));
    CHECK(std::fabs(m.trace()) < 1e-9 * (1.0 + std::sqrt(rm.full_norm_sq())));
  }
}

TEST_CASE("k_positivity: examples") {
  const SpectralSummary sphere =
      spectrum(curvature_operator(space_form(4, 1.0), Frame::standard(4)));
  const KPositivity kp1 = k_positivity(sphere, 1);
  CHECK(kp1.verdict == Positivity::positive);
  CHECK(kp1.margin == doctest::Approx(1.0));

  const SpectralSummary prod = spectrum(curvature_operator(s2_x_s2(), Frame::standard(4)));
  CHECK(k_positivity(prod, 2).verdict == Positivity::nonneg);
  CHECK(k_positivity(prod, 2).margin == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(k_positivity(prod, 5).verdict == Positivity::positive);
  CHECK(k_positivity(prod, 5).margin == doctest::Approx(1.0));

  CHECK_THROWS_AS(k_positivity(prod, 0), RangeError);
  CHECK_THROWS_AS(k_positivity(prod, 7), RangeError);
}

TEST_CASE("sectional_range: examples") {
  const auto [lo, hi] = sectional_range(space_form(5, 1.0));
  CHECK(lo == doctest::Approx(1.0));
  CHECK(hi == doctest::Approx(1.0));

  const auto [zlo, zhi] = sectional_range(CurvatureTensor(4));
  CHECK(zlo == 0.0);
  CHECK(zhi == 0.0);

  // Conformally flat from prescribed Ricci spectrum: operator eigenvalues
  // are the lambda_ij, so the range is (min, max) of that list.
  const std::vector<double> ric = {-1.0, 0.5, 1.0, 2.0};
  const CurvatureTensor lcf = conformally_flat_from_ricci(ric);
  double r = 0.0;
  for (double v : ric) r += v;
  std::vector<double> lam;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) lam.push_back((ric[i] + ric[j] - r / 3.0) / 2.0);
  const auto [clo, chi] = sectional_range(lcf);
  CHECK(clo == doctest::Approx(*std::min_element(lam.begin(), lam.end())).epsilon(1e-12));
  CHECK(chi == doctest::Approx(*std::max_element(lam.begin(), lam.end())).epsilon(1e-12));

  CHECK_THROWS_AS(sectional_range(s2_x_s2()), NotConformallyFlatError);
}

TEST_CASE("quasi_positive_quantity: examples") {
  CHECK(quasi_positive_quantity({3, 3, 3, 3}, 12.0, 4) == doctest::Approx(0.0));
  CHECK(quasi_positive_quantity({4, 4, 4, 4, 4}, 20.0, 5) == doctest::Approx(8.0 / 3.0));
  CHECK(quasi_positive_quantity({0, 0, 0}, 0.0, 3) == 0.0);
  CHECK_THROWS_AS(quasi_positive_quantity({1, 2, 3}, 6.0, 2), DimensionError);
  CHECK_THROWS_AS(quasi_positive_quantity({3, 2, 1}, 6.0, 4), PreconditionError);
}
