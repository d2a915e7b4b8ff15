#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "curvop/matrix.hpp"

namespace curvop {

// Symmetric (0,2) tensor in a fixed orthonormal frame. The metric is always
// the identity in this frame, so no index raising or lowering exists anywhere
// in this library.
class SymTwoTensor {
 public:
  explicit SymTwoTensor(int dim);  // zero tensor, dim >= 2

  // Builds from a matrix; throws ValidationError if it is not symmetric to
  // the last bit (storage keeps the symmetry exact afterwards).
  static SymTwoTensor from_matrix(const SquareMatrix& m);

  // The metric g, i.e. the identity.
  static SymTwoTensor metric(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  double trace() const { return m_.trace(); }
  double full_norm_sq() const { return m_.frobenius_sq(); }
  const SquareMatrix& matrix() const { return m_; }

  SymTwoTensor& add_scaled(const SymTwoTensor& other, double c);
  SymTwoTensor scaled(double c) const;

 private:
  int dim_;
  SquareMatrix m_;
};

// (0,4) tensor with the full Riemann symmetries. All mutation goes through
// representative entries (i<j, k<l, (i,j) <= (k,l) lexicographically) so that
// the antisymmetries and the pair symmetry hold exactly, not just to rounding.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int dim);  // zero tensor, dim >= 3

  // rep(i,j,k,l) is consulted only at representative index tuples; every
  // other slot is filled by the symmetry orbit.
  static CurvatureTensor from_representatives(
      int dim, const std::function<double(int, int, int, int)>& rep);

  int dim() const { return dim_; }
  double operator()(int i, int j, int k, int l) const {
    return a_[flat(i, j, k, l)];
  }

  double full_norm_sq() const;

  CurvatureTensor& add_scaled(const CurvatureTensor& other, double c);
  CurvatureTensor scaled(double c) const;

  // Checks the four algebraic symmetries. Pair antisymmetries and the pair
  // exchange must hold exactly; the first Bianchi identity is checked to
  // tol * (1 + max |entry|) and can be skipped.
  void validate(double tol = 1e-9, bool check_bianchi = true) const;

  // Largest first-Bianchi cyclic sum over all index tuples.
  double bianchi_residual() const;

  // Writes v into the whole symmetry orbit of (i,j,k,l); i<j, k<l required.
  void set_orbit(int i, int j, int k, int l, double v);

 private:
  std::size_t flat(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l;
  }

  int dim_;
  std::vector<double> a_;
};

// Orthonormal frame: rows of `vectors` form an orthonormal basis. Throws
// FrameError if vectors * vectors^T deviates from the identity by > 1e-10.
class Frame {
 public:
  explicit Frame(SquareMatrix vectors);
  static Frame standard(int dim);

  int dim() const { return vectors_.size(); }
  // Component c of frame vector i.
  double operator()(int i, int c) const { return vectors_(i, c); }
  const SquareMatrix& vectors() const { return vectors_; }

 private:
  SquareMatrix vectors_;
};

// (S o T)(X,Y,Z,W) = S(X,Z)T(Y,W) - S(X,W)T(Y,Z) + S(Y,W)T(X,Z) - S(Y,Z)T(X,W)
CurvatureTensor kulkarni_nomizu(const SymTwoTensor& s, const SymTwoTensor& t);

// Ric(X,Y) = sum_j Rm(X, e_j, Y, e_j).
SymTwoTensor ricci_contract(const CurvatureTensor& rm);

double scalar_curvature(const CurvatureTensor& rm);

// Deterministic random algebraic curvature tensor: a raw Gaussian array is
// antisymmetrized in both pairs, symmetrized under pair exchange, and then
// projected onto the kernel of the Bianchi cyclic sum (factor 1/3).
CurvatureTensor symmetrize_random(std::uint64_t seed, int dim);

// Components of rm in the given frame, i.e. rm(f_a, f_b, f_c, f_d).
CurvatureTensor rotate(const CurvatureTensor& rm, const Frame& frame);

}  // namespace curvop
