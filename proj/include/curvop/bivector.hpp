#pragma once

#include <utility>
#include <vector>

#include "curvop/matrix.hpp"
#include "curvop/tensor.hpp"

namespace curvop {

// Lexicographic enumeration of the i<j pairs indexing the Lambda^2 basis.
// This pair order is frozen: matrix dumps and reports all use it.
class BivectorIndex {
 public:
  explicit BivectorIndex(int dim);

  int dim() const { return dim_; }
  int count() const { return static_cast<int>(pairs_.size()); }  // N = n(n-1)/2
  std::pair<int, int> pair(int a) const { return pairs_[a]; }
  int flat(int i, int j) const { return flat_[i * dim_ + j]; }   // needs i < j

 private:
  int dim_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> flat_;
};

// Symmetric N x N matrix over the Lambda^2 pair basis.
class BivectorMatrix {
 public:
  BivectorMatrix(BivectorIndex index, SquareMatrix entries);

  const BivectorIndex& index() const { return index_; }
  const SquareMatrix& entries() const { return entries_; }
  double trace() const { return entries_.trace(); }
  double frobenius_sq() const { return entries_.frobenius_sq(); }

 private:
  BivectorIndex index_;
  SquareMatrix entries_;
};

struct SpectralSummary {
  std::vector<double> eigenvalues;  // ascending
  std::vector<double> prefix_sums;  // prefix_sums[k-1] = mu_1 + ... + mu_k

  // 1-based partial sum of the k smallest eigenvalues.
  double prefix(int k) const;
};

enum class Positivity { positive, nonneg, indefinite };

struct KPositivity {
  Positivity verdict;
  double margin;  // the partial sum itself
};

struct Theorem12Blocks {
  BivectorMatrix schouten_block;  // diagonal, entries lambda_ij in pair order
  BivectorMatrix weyl_block;      // Weyl tensor components in the Ricci eigenframe
  Frame frame;                    // Ricci eigenframe, eigenvalues ascending
  std::vector<double> ricci_eigenvalues;
};

// entry[(i,j),(k,l)] = rm(f_i, f_j, f_k, f_l) for the frame rows f.
BivectorMatrix curvature_operator(const CurvatureTensor& rm, const Frame& frame);

// Orthonormal eigenbasis of a symmetric 2-tensor, rows ordered by ascending
// eigenvalue.
std::pair<Frame, std::vector<double>> ricci_eigenframe(const SymTwoTensor& ric);

// In the Ricci eigenframe the operator splits into a diagonal part with
// entries lambda_ij = (lambda_i + lambda_j - R/(n-1))/(n-2) and the Weyl
// block; their sum reproduces curvature_operator(rm, frame).
Theorem12Blocks theorem12_blocks(const CurvatureTensor& rm);

SpectralSummary spectrum(const BivectorMatrix& m);

// Sign of mu_1 + ... + mu_k with strict/loose thresholds at +-1e-10.
KPositivity k_positivity(const SpectralSummary& s, int k);

// (mu_1, mu_N) as certified sectional curvature bounds; valid only when the
// Weyl part vanishes, so demands full_norm_sq(weyl) < tol*(1+full_norm_sq(rm)).
std::pair<double, double> sectional_range(const CurvatureTensor& rm, double tol = 1e-9);

// (lambda_1 + 2 lambda_2 + lambda_3) - 2 R / (n-2) for ascending Ricci
// eigenvalues.
double quasi_positive_quantity(const std::vector<double>& ricci_eigenvalues, double scalar,
                               int dim);

}  // namespace curvop
