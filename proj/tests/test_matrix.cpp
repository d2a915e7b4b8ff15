#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "curvop/errors.hpp"
#include "curvop/matrix.hpp"
#include "curvop/rng.hpp"
#include "test_util.hpp"

using namespace curvop;
using curvop::testing::random_symmetric;

TEST_CASE("jacobi: 2x2 closed form") {
  SquareMatrix m(2);
  m(0, 0) = 2.0;
  m(1, 1) = 0.0;
  m(0, 1) = m(1, 0) = 1.0;
  // Eigenvalues of [[2,1],[1,0]] are 1 +- sqrt(2).
  const auto eig = jacobi_eigenvalues(m);
  CHECK(eig[0] == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("jacobi: diagonal input untouched") {
  SquareMatrix m(3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const auto eig = jacobi_eigenvalues(m);
  CHECK(eig[0] == 1.0);
  CHECK(eig[1] == 2.0);
  CHECK(eig[2] == 3.0);
}

TEST_CASE("jacobi: residuals, orthogonality, trace on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + rng.uniform_int(11);
    const SquareMatrix m = random_symmetric(n, rng);
    const SymEigen eig = jacobi_eigen(m);

    double trace_sum = 0.0;
    for (double v : eig.values) trace_sum += v;
    CHECK(trace_sum == doctest::Approx(m.trace()).epsilon(1e-10));

    for (int r = 0; r < n; ++r) {
      // ||A v - lambda v||
      double resid = 0.0;
      for (int i = 0; i < n; ++i) {
        double av = 0.0;
        for (int j = 0; j < n; ++j) av += m(i, j) * eig.vectors(r, j);
        resid = std::max(resid, std::fabs(av - eig.values[r] * eig.vectors(r, i)));
      }
      CHECK(resid < 1e-10 * (1.0 + std::sqrt(m.frobenius_sq())));
      if (r > 0) CHECK(eig.values[r] >= eig.values[r - 1]);
      for (int s = 0; s <= r; ++s) {
        double dot = 0.0;
        for (int c = 0; c < n; ++c) dot += eig.vectors(r, c) * eig.vectors(s, c);
        CHECK(std::fabs(dot - (r == s ? 1.0 : 0.0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("jacobi: zero matrix") {
  const auto eig = jacobi_eigenvalues(SquareMatrix(4));
  for (double v : eig) CHECK(v == 0.0);
}
