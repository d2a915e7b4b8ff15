#include "curvop/decompose.hpp"

#include <cmath>
#include <string>

#include "curvop/errors.hpp"

namespace curvop {

SymTwoTensor schouten(const CurvatureTensor& rm) {
  const int n = rm.dim();
  if (n < 3) throw DimensionError("schouten: dim must be >= 3");
  const SymTwoTensor ric = ricci_contract(rm);
  const double r = ric.trace();
  SymTwoTensor s(n);
  s.add_scaled(ric, 1.0 / (n - 2));
  s.add_scaled(SymTwoTensor::metric(n), -r / ((n - 2) * 2.0 * (n - 1)));
  return s;
}

CurvatureTensor weyl(const CurvatureTensor& rm) {
  const SymTwoTensor s = schouten(rm);
  CurvatureTensor w = rm;
  w.add_scaled(kulkarni_nomizu(s, SymTwoTensor::metric(rm.dim())), -1.0);
  return w;
}

DecomposedCurvature orthogonal_decompose(const CurvatureTensor& rm) {
  const int n = rm.dim();
  if (n < 3) throw DimensionError("orthogonal_decompose: dim must be >= 3");
  const SymTwoTensor g = SymTwoTensor::metric(n);
  SymTwoTensor ric = ricci_contract(rm);
  const double r = ric.trace();

  SymTwoTensor s(n);
  s.add_scaled(ric, 1.0 / (n - 2));
  s.add_scaled(g, -r / ((n - 2) * 2.0 * (n - 1)));

  SymTwoTensor ric0 = ric;
  ric0.add_scaled(g, -r / n);

  CurvatureTensor w = rm;
  w.add_scaled(kulkarni_nomizu(s, g), -1.0);

  CurvatureTensor z = w;
  z.add_scaled(kulkarni_nomizu(ric0, g), 1.0 / (n - 2));

  return DecomposedCurvature{r, ric, s, ric0, w, z};
}

double concircular_norm_sq(const DecomposedCurvature& d) {
  const int n = d.weyl.dim();
  const double direct = d.concircular.full_norm_sq();
  const double via_parts =
      4.0 / (n - 2) * d.traceless_ricci.full_norm_sq() + d.weyl.full_norm_sq();
  const double scale = 1.0 + std::fabs(direct) + std::fabs(via_parts);
  if (std::fabs(direct - via_parts) > 1e-8 * scale)
    throw InternalConsistencyError(
        "concircular_norm_sq: |Z|^2 = " + std::to_string(direct) +
        " disagrees with (4/(n-2))|Ric0|^2 + |W|^2 = " + std::to_string(via_parts));
  return direct;
}

double pinching_quantity(const DecomposedCurvature& d) {
  const int n = d.weyl.dim();
  return std::sqrt(1.0 / (n - 2)) * std::sqrt(d.traceless_ricci.full_norm_sq()) +
         std::sqrt(d.weyl.full_norm_sq());
}

double weyl_trace_residual(const CurvatureTensor& w) {
  const int n = w.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double t = 0.0;
      for (int j = 0; j < n; ++j) t += w(i, j, k, j);
      worst = std::max(worst, std::fabs(t));
    }
  return worst;
}

}  // namespace curvop
