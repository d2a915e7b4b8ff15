#include "curvop/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "curvop/errors.hpp"

namespace curvop {

double SquareMatrix::asymmetry() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(double c) {
  for (double& v : a_) v *= c;
  return *this;
}

namespace {

double off_diagonal_norm_sq(const SquareMatrix& m) {
  const int n = m.size();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return s;
}

}  // namespace

SymEigen jacobi_eigen(SquareMatrix m, int max_sweeps, double tol_factor) {
  const int n = m.size();
  SquareMatrix v = SquareMatrix::identity(n);
  const double norm = std::sqrt(m.frobenius_sq());
  const double stop = tol_factor * norm;

  bool converged = (norm == 0.0) || (std::sqrt(off_diagonal_norm_sq(m)) <= stop);
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        const double app = m(p, p);
        const double aqq = m(q, q);
        m(p, p) = app - t * apq;
        m(q, q) = aqq + t * apq;
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = m(i, p);
          const double aiq = m(i, q);
          m(i, p) = aip - s * (aiq + tau * aip);
          m(i, q) = aiq + s * (aip - tau * aiq);
          m(p, i) = m(i, p);
          m(q, i) = m(i, q);
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = vip - s * (viq + tau * vip);
          v(i, q) = viq + s * (vip - tau * viq);
        }
      }
    }
    converged = std::sqrt(off_diagonal_norm_sq(m)) <= stop;
  }
  if (!converged) throw NumericalError("jacobi_eigen: no convergence after max sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (m(a, a) != m(b, b)) return m(a, a) < m(b, b);
    return a < b;
  });

  SymEigen result{std::vector<double>(n), SquareMatrix(n)};
  for (int r = 0; r < n; ++r) {
    const int col = order[r];
    result.values[r] = m(col, col);
    double peak = 0.0;
    for (int i = 0; i < n; ++i) peak = std::max(peak, std::fabs(v(i, col)));
    double sign = 1.0;
    for (int i = 0; i < n; ++i) {
      if (std::fabs(v(i, col)) > 1e-12 * peak) {
        sign = v(i, col) > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int i = 0; i < n; ++i) result.vectors(r, i) = sign * v(i, col);
  }
  return result;
}

std::vector<double> jacobi_eigenvalues(const SquareMatrix& m) {
  return jacobi_eigen(m).values;
}

}  // namespace curvop
