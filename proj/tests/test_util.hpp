#pragma once

// Shared helpers for the test suites. The brute-force oracles here stay
// deliberately independent of the library code paths they check.

#include <cmath>
#include <vector>

#include "curvop/matrix.hpp"
#include "curvop/rng.hpp"
#include "curvop/tensor.hpp"

namespace curvop::testing {

// Direct four-index evaluation of the Kulkarni-Nomizu formula, no
// representative bookkeeping.
inline double kn_direct(const SymTwoTensor& s, const SymTwoTensor& t, int i, int j, int k,
                        int l) {
  return s(i, k) * t(j, l) - s(i, l) * t(j, k) + s(j, l) * t(i, k) - s(j, k) * t(i, l);
}

inline double max_component_diff(const CurvatureTensor& a, const CurvatureTensor& b) {
  double worst = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          worst = std::max(worst, std::fabs(a(i, j, k, l) - b(i, j, k, l)));
  return worst;
}

inline double max_abs_component(const CurvatureTensor& a) {
  double worst = 0.0;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) worst = std::max(worst, std::fabs(a(i, j, k, l)));
  return worst;
}

inline SquareMatrix random_symmetric(int n, Rng& rng) {
  SquareMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = rng.normal();
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

// Random orthogonal matrix via Gram-Schmidt on Gaussian rows.
inline SquareMatrix random_orthogonal(int n, Rng& rng) {
  SquareMatrix q(n);
  for (int r = 0; r < n; ++r) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    for (int prev = 0; prev < r; ++prev) {
      double dot = 0.0;
      for (int c = 0; c < n; ++c) dot += q(prev, c) * v[c];
      for (int c = 0; c < n; ++c) v[c] -= dot * q(prev, c);
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (int c = 0; c < n; ++c) q(r, c) = v[c] / norm;
  }
  return q;
}

}  // namespace curvop::testing
