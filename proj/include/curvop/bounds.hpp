#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvop/matrix.hpp"

namespace curvop {

// Uniform record for an inequality lhs >= rhs. `holds` allows slack down to
// -1e-9 * (1 + |rhs|).
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool holds = false;
  std::optional<std::string> equality_case;  // "all-zero" | "two-level"
};

BoundCheck make_bound_check(double lhs, double rhs);

// Zero-sum lowest-k bound: for ascending a_1 <= ... <= a_N with sum 0,
//   sum_{i<=k} a_i >= -sqrt(k(N-k)/N) * ||a||_2,
// with equality exactly for the scaled two-level family
// (-(N-k),...,-(N-k), k,...,k) and for the zero sequence. Input drift up to
// 1e-9*(1+max|a_i|) is centered away; larger drift is a PreconditionError.
BoundCheck lemma32_bound(std::vector<double> a, int k);

// Lower sums are subadditive, upper sums superadditive. Returned as
// (lower, upper) checks for symmetric A, B of equal size.
std::pair<BoundCheck, BoundCheck> eigen_sum_subadditivity(const SquareMatrix& a,
                                                          const SquareMatrix& b, int k);

// Random orthonormal k-tuples never beat the top-k eigenvalue sum:
// lhs = sum of k largest eigenvalues, rhs = best trial value.
BoundCheck ky_fan_check(const SquareMatrix& a, int k, int trials, std::uint64_t seed);

// sum_j <x_j, A x_j> for an explicit tuple (the quantity the Ky Fan principle
// extremizes).
double ky_fan_quadratic_sum(const SquareMatrix& a,
                            const std::vector<std::vector<double>>& tuple);

// |lambda_i - tr/n| <= sqrt((n-1)/n (||A||_2^2 - tr^2/n)) for every i.
std::vector<BoundCheck> concentration_check(const SquareMatrix& a);

// Named threshold coefficients used by the certificates. Values multiply the
// curvature level a, the Yamabe constant, or stand alone (gb4 = 8 pi^2).
enum class ThresholdKind { thm14, cor34, thm15, thm16, cor17, thm19_gap1, thm19_gap2, gb4 };

ThresholdKind threshold_kind_from_string(const std::string& name);

double threshold(ThresholdKind kind, int n = 0, int k = 0);

// 1 + 1/(n-p) > 4p(n-p)/(n(n-2)) for n >= 8, 1 <= p <= n/2 - 2; the verdict
// is decided in integer arithmetic.
BoundCheck lemma44_check(int n, int p);

// (k a - sqrt(k(N-k)/N) |W|, k a + sqrt(k(N-k)/N) |W|): the lowest-k lower
// bound and the mirrored top-k upper bound.
std::pair<double, double> prop33_bounds(double a, double weyl_norm, int n, int k);

// k R/(n(n-1)) - sqrt(k(N-k)/N) (sqrt(1/(n-2)) |Ric0| + |W|).
double prop46_bound(double scalar, double ric0_norm, double weyl_norm, int n, int k);

}  // namespace curvop
