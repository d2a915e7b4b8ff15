#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "curvop/tensor.hpp"

namespace curvop {

struct ModelFactor {
  int dim = 0;
  double curvature = 0.0;
};

// Declarative generator spec, mirrored by the JSON "model" object in tensor
// and field files.
struct ModelSpec {
  enum class Kind { space_form, product, random, raw };
  Kind kind = Kind::space_form;
  int dim = 0;
  double curvature = 0.0;                   // space_form
  std::vector<ModelFactor> factors;         // product
  std::uint64_t seed = 0;                   // random
  double weyl_scale = 0.0;                  // random
  double ricci_scale = 0.0;                 // random
  double scalar = 0.0;                      // random
  std::vector<std::array<double, 5>> raw;   // raw: (i,j,k,l,value) rows
};

// Rm = (c/2) g o g: constant sectional curvature c.
CurvatureTensor space_form(int n, double c);

// Block-diagonal curvature of a Riemannian product of space forms; dim-1
// factors contribute a flat block. Total dimension must be >= 3.
CurvatureTensor product(const std::vector<ModelFactor>& factors);

// (scalar/(2n(n-1))) g o g + (1/(n-2)) S o g + w with S a seeded unit-norm
// trace-free symmetric tensor scaled by ricci_scale and w a unit-norm Weyl
// tensor scaled by weyl_scale. orthogonal_decompose recovers the three
// parts.
CurvatureTensor random_curvature(int n, std::uint64_t seed, double weyl_scale,
                                 double ricci_scale, double scalar);

// Conformally flat tensor S o g built from prescribed Ricci eigenvalues on
// the diagonal.
CurvatureTensor conformally_flat_from_ricci(const std::vector<double>& ricci_eigenvalues);

// Projection onto the totally trace-free subspace: Ricci-contraction
// subtractions iterated until the contraction norm falls below 1e-12.
CurvatureTensor weyl_projection(const CurvatureTensor& t);

CurvatureTensor from_model(const ModelSpec& spec);

}  // namespace curvop
