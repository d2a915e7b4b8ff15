#include "curvop/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/errors.hpp"
#include "curvop/rng.hpp"

namespace curvop {

BoundCheck make_bound_check(double lhs, double rhs) {
  BoundCheck c;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = lhs - rhs;
  c.holds = c.slack >= -1e-9 * (1.0 + std::fabs(rhs));
  return c;
}

BoundCheck lemma32_bound(std::vector<double> a, int k) {
  const int n = static_cast<int>(a.size());
  if (n < 1) throw PreconditionError("lemma32_bound: empty sequence");
  if (k < 1 || k > n) throw RangeError("lemma32_bound: k out of range");
  for (int i = 1; i < n; ++i)
    if (a[i] < a[i - 1]) throw PreconditionError("lemma32_bound: sequence must be ascending");

  double sum = 0.0, peak = 0.0;
  for (double v : a) {
    sum += v;
    peak = std::max(peak, std::fabs(v));
  }
  if (std::fabs(sum) >= 1e-9 * (1.0 + peak))
    throw PreconditionError("lemma32_bound: sequence does not sum to zero");
  const double mean = sum / n;
  for (double& v : a) v -= mean;

  double head = 0.0, norm_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i < k) head += a[i];
    norm_sq += a[i] * a[i];
  }
  const double rhs = -std::sqrt(static_cast<double>(k) * (n - k) / n) * std::sqrt(norm_sq);
  BoundCheck c = make_bound_check(head, rhs);

  // Equality classification.
  const double tol = 1e-9 * (1.0 + peak);
  bool all_zero = true;
  for (double v : a) all_zero = all_zero && std::fabs(v) <= tol;
  if (all_zero) {
    c.equality_case = "all-zero";
    return c;
  }
  if (k < n) {
    bool head_flat = true, tail_flat = true;
    for (int i = 1; i < k; ++i) head_flat = head_flat && std::fabs(a[i] - a[0]) <= tol;
    for (int i = k + 1; i < n; ++i) tail_flat = tail_flat && std::fabs(a[i] - a[k]) <= tol;
    // Ascending + zero sum force the two levels into the ratio -(N-k) : k, so
    // flatness of both runs is the whole test.
    if (head_flat && tail_flat) c.equality_case = "two-level";
  }
  return c;
}

std::pair<BoundCheck, BoundCheck> eigen_sum_subadditivity(const SquareMatrix& a,
                                                          const SquareMatrix& b, int k) {
  const int n = a.size();
  if (b.size() != n) throw DimensionError("eigen_sum_subadditivity: shape mismatch");
  if (k < 1 || k > n) throw RangeError("eigen_sum_subadditivity: k out of range");
  const std::vector<double> la = jacobi_eigenvalues(a);
  const std::vector<double> lb = jacobi_eigenvalues(b);
  const std::vector<double> lab = jacobi_eigenvalues(a + b);

  double low_ab = 0.0, low_sep = 0.0, up_ab = 0.0, up_sep = 0.0;
  for (int i = 0; i < k; ++i) {
    low_ab += lab[i];
    low_sep += la[i] + lb[i];
    up_ab += lab[n - 1 - i];
    up_sep += la[n - 1 - i] + lb[n - 1 - i];
  }
  return {make_bound_check(low_ab, low_sep), make_bound_check(up_sep, up_ab)};
}

BoundCheck ky_fan_check(const SquareMatrix& a, int k, int trials, std::uint64_t seed) {
  const int n = a.size();
  if (k < 1 || k > n) throw RangeError("ky_fan_check: k out of range");
  const std::vector<double> eig = jacobi_eigenvalues(a);
  double eig_top = 0.0;
  for (int i = 0; i < k; ++i) eig_top += eig[n - 1 - i];

  Rng rng(seed);
  double best = -HUGE_VAL;
  for (int t = 0; t < trials; ++t) {
    // Gram-Schmidt on seeded Gaussian vectors.
    std::vector<std::vector<double>> tuple;
    while (static_cast<int>(tuple.size()) < k) {
      std::vector<double> v(n);
      for (double& x : v) x = rng.normal();
      for (const auto& u : tuple) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += u[i] * v[i];
        for (int i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
      double norm_sq = 0.0;
      for (double x : v) norm_sq += x * x;
      if (norm_sq < 1e-20) continue;
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (double& x : v) x *= inv;
      tuple.push_back(std::move(v));
    }
    double quad = 0.0;
    for (const auto& x : tuple)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) quad += x[i] * a(i, j) * x[j];
    best = std::max(best, quad);
  }
  if (trials == 0) best = eig_top;  // vacuous run
  return make_bound_check(eig_top, best);
}

double ky_fan_quadratic_sum(const SquareMatrix& a,
                            const std::vector<std::vector<double>>& tuple) {
  const int n = a.size();
  double quad = 0.0;
  for (const auto& x : tuple)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) quad += x[i] * a(i, j) * x[j];
  return quad;
}

std::vector<BoundCheck> concentration_check(const SquareMatrix& a) {
  const int n = a.size();
  const std::vector<double> eig = jacobi_eigenvalues(a);
  const double tr = a.trace();
  const double radius_sq = (n - 1.0) / n * (a.frobenius_sq() - tr * tr / n);
  const double radius = std::sqrt(std::max(0.0, radius_sq));
  std::vector<BoundCheck> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back(make_bound_check(radius, std::fabs(eig[i] - tr / n)));
  return out;
}

ThresholdKind threshold_kind_from_string(const std::string& name) {
  if (name == "thm14") return ThresholdKind::thm14;
  if (name == "cor34") return ThresholdKind::cor34;
  if (name == "thm15") return ThresholdKind::thm15;
  if (name == "thm16") return ThresholdKind::thm16;
  if (name == "cor17") return ThresholdKind::cor17;
  if (name == "thm19_gap1") return ThresholdKind::thm19_gap1;
  if (name == "thm19_gap2") return ThresholdKind::thm19_gap2;
  if (name == "gb4") return ThresholdKind::gb4;
  throw RangeError("threshold: unknown kind '" + name + "'");
}

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void require_k(int n, int k) {
  const int big_n = pair_count(n);
  if (k < 1 || k > big_n - 1) throw RangeError("threshold: k must satisfy 1 <= k <= N-1");
}

}  // namespace

double threshold(ThresholdKind kind, int n, int k) {
  if (kind == ThresholdKind::gb4) return 8.0 * M_PI * M_PI;
  if (n < 3) throw RangeError("threshold: n must be >= 3");
  const double big_n = pair_count(n);
  switch (kind) {
    case ThresholdKind::thm14:
      return std::sqrt(static_cast<double>(n) * (n - 1) /
                       (static_cast<double>(n + 1) * (n - 2)));
    case ThresholdKind::cor34:
      require_k(n, k);
      return std::sqrt(k * big_n / (big_n - k));
    case ThresholdKind::thm15:
      require_k(n, k);
      return std::sqrt(k * big_n / (big_n - k)) * (n - 2) / n;
    case ThresholdKind::thm16:
      require_k(n, k);
      return std::sqrt(big_n * k / (big_n - k)) / (static_cast<double>(n) * (n - 1));
    case ThresholdKind::cor17:
      require_k(n, k);
      return (n - 2.0) / (static_cast<double>(n) * n * (n - 1)) *
             std::sqrt(k * (big_n - k) / big_n);
    case ThresholdKind::thm19_gap1: {
      require_k(n, k);
      const double base = std::sqrt(big_n * k / (big_n - k));
      const double damped = static_cast<double>(n) * (n - 2) / (8.0 * (n - 1)) * base;
      return std::min(base, damped);
    }
    case ThresholdKind::thm19_gap2:
      return 1.0 / (std::sqrt(2.0 * n) * (n - 1));
    case ThresholdKind::gb4:
      break;
  }
  throw RangeError("threshold: unreachable kind");
}

BoundCheck lemma44_check(int n, int p) {
  if (n < 8) throw RangeError("lemma44_check: n must be >= 8");
  if (p < 1 || 2 * p > n - 4) throw RangeError("lemma44_check: p must satisfy 1 <= p <= n/2 - 2");
  const double lhs = 1.0 + 1.0 / (n - p);
  const double rhs = 4.0 * p * (n - p) / (static_cast<double>(n) * (n - 2));
  BoundCheck c = make_bound_check(lhs, rhs);
  // Exact integer verdict: (n-p+1) n (n-2) > 4 p (n-p)^2.
  const long long left = static_cast<long long>(n - p + 1) * n * (n - 2);
  const long long right = 4LL * p * (n - p) * (n - p);
  c.holds = left > right;
  return c;
}

std::pair<double, double> prop33_bounds(double a, double weyl_norm, int n, int k) {
  if (weyl_norm < 0.0) throw PreconditionError("prop33_bounds: weyl_norm must be >= 0");
  if (n < 3) throw DimensionError("prop33_bounds: n must be >= 3");
  const double big_n = pair_count(n);
  if (k < 1 || k > big_n - 1) throw RangeError("prop33_bounds: k out of range");
  const double spread = std::sqrt(k * (big_n - k) / big_n) * weyl_norm;
  return {k * a - spread, k * a + spread};
}

double prop46_bound(double scalar, double ric0_norm, double weyl_norm, int n, int k) {
  if (n < 4) throw DimensionError("prop46_bound: n must be >= 4");
  if (ric0_norm < 0.0 || weyl_norm < 0.0)
    throw PreconditionError("prop46_bound: norms must be >= 0");
  const double big_n = pair_count(n);
  if (k < 1 || k > big_n) throw RangeError("prop46_bound: k out of range");
  return k * scalar / (static_cast<double>(n) * (n - 1)) -
         std::sqrt(k * (big_n - k) / big_n) *
             (std::sqrt(1.0 / (n - 2)) * ric0_norm + weyl_norm);
}

}  // namespace curvop
