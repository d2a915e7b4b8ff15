#pragma once

#include <cstdint>
#include <vector>

#include "curvop/matrix.hpp"
#include "curvop/tensor.hpp"

namespace curvop {

// Matrix of v -> Rm(u, v, u, .) restricted to the hyperplane orthogonal to
// the unit vector u, in the basis produced by Gram-Schmidt on the standard
// basis with the axis most aligned to u dropped.
SquareMatrix directional_operator(const CurvatureTensor& rm, const std::vector<double>& u);

// Orthonormal basis of the hyperplane orthogonal to u (rows), same
// construction as directional_operator.
std::vector<std::vector<double>> hyperplane_basis(const std::vector<double>& u);

// Sum of the k smallest eigenvalues of directional_operator(rm, u); by the
// Ky Fan minimum principle this equals the infimum over orthonormal k-frames
// in the hyperplane of the corresponding sectional curvature sums.
double ric_k_at(const CurvatureTensor& rm, const std::vector<double>& u, int k);

struct RicKResult {
  int k = 0;
  double value = 0.0;
  std::vector<double> argmin_direction;
  int restarts_used = 0;
  bool converged = false;
};

// Global minimum of ric_k_at over unit directions by seeded multi-start
// projected gradient descent. Heuristic: convergence is self-reported, not
// certified.
RicKResult ric_k_min(const CurvatureTensor& rm, int k, int restarts = 64,
                     std::uint64_t seed = 0, double tol = 1e-8);

// Deterministic quasi-uniform directions on the unit sphere of R^dim
// (low-discrepancy constructions for dim 3 and 4, seeded otherwise). Used by
// the brute-force scan below.
std::vector<std::vector<double>> grid_directions(int dim, int points);

// Brute-force scan reference for ric_k_min: per-k minima and maxima of the
// directional eigenvalue prefix/suffix sums over a dense direction set.
// min_by_k[k-1] = min_u (k smallest), max_by_k[k-1] = max_u (k largest).
struct GridExtrema {
  std::vector<double> min_by_k;
  std::vector<double> max_by_k;
};

GridExtrema ric_k_grid_extrema(const CurvatureTensor& rm, int points);

}  // namespace curvop
