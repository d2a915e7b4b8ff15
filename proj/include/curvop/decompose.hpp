#pragma once

#include "curvop/tensor.hpp"

namespace curvop {

// All pieces of Rm = (R/(2n(n-1))) g o g + (1/(n-2)) Ric0 o g + W, together
// with the Schouten form Rm = S o g + W and the concircular tensor
// Z = (1/(n-2)) Ric0 o g + W.
struct DecomposedCurvature {
  double scalar;
  SymTwoTensor ricci;
  SymTwoTensor schouten;
  SymTwoTensor traceless_ricci;
  CurvatureTensor weyl;
  CurvatureTensor concircular;
};

// S = (1/(n-2)) (Ric - R/(2(n-1)) g); needs dim >= 3.
SymTwoTensor schouten(const CurvatureTensor& rm);

// W = Rm - S o g (computed by subtraction, not by an explicit Weyl formula).
CurvatureTensor weyl(const CurvatureTensor& rm);

DecomposedCurvature orthogonal_decompose(const CurvatureTensor& rm);

// |Z|^2, cross-checked against (4/(n-2))|Ric0|^2 + |W|^2 to 1e-8 relative;
// a violation throws InternalConsistencyError.
double concircular_norm_sq(const DecomposedCurvature& d);

// sqrt(1/(n-2)) |Ric0| + |W|.
double pinching_quantity(const DecomposedCurvature& d);

// Largest |sum_j W_ijkj| over (i,k); zero for a genuine Weyl tensor.
double weyl_trace_residual(const CurvatureTensor& w);

}  // namespace curvop
