#include "curvop/model_zoo.hpp"

#include <cmath>
#include <string>

#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"
#include "curvop/rng.hpp"

namespace curvop {

CurvatureTensor space_form(int n, double c) {
  // Dim-2 blocks only ever appear inside products; a standalone tensor needs
  // n >= 3, which CurvatureTensor enforces anyway.
  if (n < 3) throw DimensionError("space_form: n must be >= 3");
  const SymTwoTensor g = SymTwoTensor::metric(n);
  return kulkarni_nomizu(g, g).scaled(c / 2.0);
}

CurvatureTensor product(const std::vector<ModelFactor>& factors) {
  int total = 0;
  for (const ModelFactor& f : factors) {
    if (f.dim < 1) throw DimensionError("product: factor dimension must be >= 1");
    total += f.dim;
  }
  if (total < 3) throw DimensionError("product: total dimension must be >= 3");

  CurvatureTensor rm(total);
  int offset = 0;
  for (const ModelFactor& f : factors) {
    // A one-dimensional factor carries no curvature.
    if (f.dim >= 2) {
      const double c = f.curvature;
      for (int i = 0; i < f.dim; ++i)
        for (int j = i + 1; j < f.dim; ++j) {
          // (c/2)(g o g) inside the block: only (i,j,i,j)-type entries.
          rm.set_orbit(offset + i, offset + j, offset + i, offset + j, c);
        }
    }
    offset += f.dim;
  }
  return rm;
}

namespace {

SymTwoTensor random_traceless_unit(int n, Rng& rng) {
  SymTwoTensor s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s.set(i, j, rng.normal());
  const double mean = s.trace() / n;
  for (int i = 0; i < n; ++i) s.set(i, i, s(i, i) - mean);
  const double nrm = std::sqrt(s.full_norm_sq());
  if (nrm < 1e-12) return random_traceless_unit(n, rng);
  return s.scaled(1.0 / nrm);
}

}  // namespace

CurvatureTensor weyl_projection(const CurvatureTensor& t) {
  CurvatureTensor w = t;
  for (int pass = 0; pass < 8; ++pass) {
    const SymTwoTensor ric = ricci_contract(w);
    if (std::sqrt(ric.full_norm_sq()) < 1e-12) return w;
    w.add_scaled(kulkarni_nomizu(schouten(w), SymTwoTensor::metric(w.dim())), -1.0);
  }
  return w;
}

CurvatureTensor random_curvature(int n, std::uint64_t seed, double weyl_scale,
                                 double ricci_scale, double scalar) {
  if (n < 3) throw DimensionError("random_curvature: n must be >= 3");
  if (n < 4 && weyl_scale != 0.0)
    throw DimensionError("random_curvature: nonzero weyl_scale needs n >= 4");

  const SymTwoTensor g = SymTwoTensor::metric(n);
  CurvatureTensor rm =
      kulkarni_nomizu(g, g).scaled(scalar / (2.0 * n * (n - 1)));

  Rng rng(seed);
  if (ricci_scale != 0.0) {
    const SymTwoTensor s = random_traceless_unit(n, rng).scaled(ricci_scale);
    rm.add_scaled(kulkarni_nomizu(s, g), 1.0 / (n - 2));
  }
  if (weyl_scale != 0.0) {
    CurvatureTensor w = weyl_projection(symmetrize_random(seed ^ 0x5bd1e995ULL, n));
    const double nrm = std::sqrt(w.full_norm_sq());
    if (nrm > 1e-12) rm.add_scaled(w, weyl_scale / nrm);
  }
  return rm;
}

CurvatureTensor conformally_flat_from_ricci(const std::vector<double>& ricci_eigenvalues) {
  const int n = static_cast<int>(ricci_eigenvalues.size());
  if (n < 3) throw DimensionError("conformally_flat_from_ricci: need n >= 3 eigenvalues");
  double r = 0.0;
  for (double l : ricci_eigenvalues) r += l;
  SymTwoTensor s(n);
  for (int i = 0; i < n; ++i)
    s.set(i, i, (ricci_eigenvalues[i] - r / (2.0 * (n - 1))) / (n - 2));
  return kulkarni_nomizu(s, SymTwoTensor::metric(n));
}

CurvatureTensor from_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelSpec::Kind::space_form:
      return space_form(spec.dim, spec.curvature);
    case ModelSpec::Kind::product:
      return product(spec.factors);
    case ModelSpec::Kind::random:
      return random_curvature(spec.dim, spec.seed, spec.weyl_scale, spec.ricci_scale,
                              spec.scalar);
    case ModelSpec::Kind::raw: {
      CurvatureTensor rm(spec.dim);
      for (const auto& row : spec.raw) {
        const int i = static_cast<int>(row[0]), j = static_cast<int>(row[1]);
        const int k = static_cast<int>(row[2]), l = static_cast<int>(row[3]);
        rm.set_orbit(i, j, k, l, row[4]);
      }
      return rm;
    }
  }
  throw UsageError("from_model: unknown model kind");
}

}  // namespace curvop
