#pragma once

#include <vector>

namespace curvop {

// Dense square matrix, row-major. Everything in this library is small
// (n <= 66), so no attempt at sparse or packed storage.
class SquareMatrix {
 public:
  explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_sq() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return s;
  }

  // Largest |a_ij - a_ji|.
  double asymmetry() const;

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator*=(double c);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }

 private:
  int n_;
  std::vector<double> a_;
};

struct SymEigen {
  std::vector<double> values;  // ascending
  SquareMatrix vectors;        // row i is the unit eigenvector for values[i]
};

// Cyclic Jacobi for real symmetric matrices. Converges when the off-diagonal
// Frobenius norm drops below tol_factor * ||M||_F; throws NumericalError after
// max_sweeps sweeps. Eigenvector signs fixed so the first component of
// significant magnitude is positive.
SymEigen jacobi_eigen(SquareMatrix m, int max_sweeps = 100, double tol_factor = 1e-13);

// Eigenvalues only (same solver, vectors discarded).
std::vector<double> jacobi_eigenvalues(const SquareMatrix& m);

}  // namespace curvop
