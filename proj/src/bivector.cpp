#include "curvop/bivector.hpp"

#include <cmath>
#include <string>

#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"

namespace curvop {

BivectorIndex::BivectorIndex(int dim) : dim_(dim), flat_(dim * dim, -1) {
  if (dim < 2) throw DimensionError("BivectorIndex: dim must be >= 2");
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      flat_[i * dim + j] = static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }
}

BivectorMatrix::BivectorMatrix(BivectorIndex index, SquareMatrix entries)
    : index_(std::move(index)), entries_(std::move(entries)) {
  if (entries_.size() != index_.count())
    throw DimensionError("BivectorMatrix: entries size does not match pair count");
  if (entries_.asymmetry() != 0.0)
    throw ValidationError("BivectorMatrix: entries must be exactly symmetric");
}

double SpectralSummary::prefix(int k) const {
  if (k < 1 || k > static_cast<int>(prefix_sums.size()))
    throw RangeError("SpectralSummary::prefix: k out of range");
  return prefix_sums[k - 1];
}

BivectorMatrix curvature_operator(const CurvatureTensor& rm, const Frame& frame) {
  if (rm.dim() != frame.dim())
    throw DimensionError("curvature_operator: frame dimension mismatch");
  const CurvatureTensor in_frame = rotate(rm, frame);
  BivectorIndex idx(rm.dim());
  const int n_pairs = idx.count();
  SquareMatrix m(n_pairs);
  for (int a = 0; a < n_pairs; ++a) {
    const auto [i, j] = idx.pair(a);
    for (int b = a; b < n_pairs; ++b) {
      const auto [k, l] = idx.pair(b);
      const double v = in_frame(i, j, k, l);
      m(a, b) = v;
      m(b, a) = v;
    }
  }
  return BivectorMatrix(std::move(idx), std::move(m));
}

std::pair<Frame, std::vector<double>> ricci_eigenframe(const SymTwoTensor& ric) {
  SymEigen eig = jacobi_eigen(ric.matrix());
  return {Frame(std::move(eig.vectors)), std::move(eig.values)};
}

Theorem12Blocks theorem12_blocks(const CurvatureTensor& rm) {
  const int n = rm.dim();
  if (n < 3) throw DimensionError("theorem12_blocks: dim must be >= 3");
  auto [frame, lambdas] = ricci_eigenframe(ricci_contract(rm));
  double r = 0.0;
  for (double l : lambdas) r += l;

  BivectorIndex idx(n);
  SquareMatrix schouten_m(idx.count());
  for (int a = 0; a < idx.count(); ++a) {
    const auto [i, j] = idx.pair(a);
    schouten_m(a, a) = (lambdas[i] + lambdas[j] - r / (n - 1)) / (n - 2);
  }

  const CurvatureTensor w = weyl(rm);
  BivectorMatrix weyl_block = curvature_operator(w, frame);

  return Theorem12Blocks{BivectorMatrix(idx, std::move(schouten_m)), std::move(weyl_block),
                         std::move(frame), std::move(lambdas)};
}

SpectralSummary spectrum(const BivectorMatrix& m) {
  SpectralSummary s;
  s.eigenvalues = jacobi_eigenvalues(m.entries());
  s.prefix_sums.resize(s.eigenvalues.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    acc += s.eigenvalues[i];
    s.prefix_sums[i] = acc;
  }
  return s;
}

KPositivity k_positivity(const SpectralSummary& s, int k) {
  if (k < 1 || k > static_cast<int>(s.eigenvalues.size()))
    throw RangeError("k_positivity: k out of range");
  const double margin = s.prefix(k);
  Positivity verdict = Positivity::indefinite;
  if (margin > 1e-10)
    verdict = Positivity::positive;
  else if (margin >= -1e-10)
    verdict = Positivity::nonneg;
  return KPositivity{verdict, margin};
}

std::pair<double, double> sectional_range(const CurvatureTensor& rm, double tol) {
  const CurvatureTensor w = weyl(rm);
  const double w_norm_sq = w.full_norm_sq();
  const double gate = tol * (1.0 + rm.full_norm_sq());
  if (w_norm_sq >= gate)
    throw NotConformallyFlatError("sectional_range: |W|^2 = " + std::to_string(w_norm_sq) +
                                  " is above the conformal flatness tolerance");
  const SpectralSummary s = spectrum(curvature_operator(rm, Frame::standard(rm.dim())));
  return {s.eigenvalues.front(), s.eigenvalues.back()};
}

double quasi_positive_quantity(const std::vector<double>& ricci_eigenvalues, double scalar,
                               int dim) {
  if (dim < 3) throw DimensionError("quasi_positive_quantity: dim must be >= 3");
  if (static_cast<int>(ricci_eigenvalues.size()) < 3)
    throw RangeError("quasi_positive_quantity: need at least three eigenvalues");
  for (std::size_t i = 1; i < ricci_eigenvalues.size(); ++i)
    if (ricci_eigenvalues[i] < ricci_eigenvalues[i - 1])
      throw PreconditionError("quasi_positive_quantity: eigenvalues must be ascending");
  return ricci_eigenvalues[0] + 2.0 * ricci_eigenvalues[1] + ricci_eigenvalues[2] -
         2.0 * scalar / (dim - 2);
}

}  // namespace curvop
