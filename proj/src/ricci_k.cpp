#include "curvop/ricci_k.hpp"

#include <algorithm>
#include <cmath>

#include "curvop/errors.hpp"
#include "curvop/rng.hpp"

namespace curvop {

namespace {

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double inv = 1.0 / norm(v);
  for (double& x : v) x *= inv;
}

void canonical_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::fabs(x) > 1e-12) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

// Distance between directions treating u and -u as the same point.
double direction_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus += (a[i] - b[i]) * (a[i] - b[i]);
    minus += (a[i] + b[i]) * (a[i] + b[i]);
  }
  return std::sqrt(std::min(plus, minus));
}

}  // namespace

std::vector<std::vector<double>> hyperplane_basis(const std::vector<double>& u) {
  const int n = static_cast<int>(u.size());
  int drop = 0;
  for (int i = 1; i < n; ++i)
    if (std::fabs(u[i]) > std::fabs(u[drop])) drop = i;

  std::vector<std::vector<double>> basis;
  basis.reserve(n - 1);
  for (int j = 0; j < n; ++j) {
    if (j == drop) continue;
    std::vector<double> v(n, 0.0);
    v[j] = 1.0;
    double dot = u[j];
    for (int i = 0; i < n; ++i) v[i] -= dot * u[i];
    for (const auto& b : basis) {
      dot = 0.0;
      for (int i = 0; i < n; ++i) dot += b[i] * v[i];
      for (int i = 0; i < n; ++i) v[i] -= dot * b[i];
    }
    normalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

SquareMatrix directional_operator(const CurvatureTensor& rm, const std::vector<double>& u) {
  const int n = rm.dim();
  if (static_cast<int>(u.size()) != n)
    throw DimensionError("directional_operator: direction dimension mismatch");
  if (std::fabs(norm(u) - 1.0) > 1e-10)
    throw PreconditionError("directional_operator: u must be a unit vector");

  // B(q,s) = sum_{p,r} u_p u_r Rm(p,q,r,s), staged through one contraction.
  std::vector<double> c(static_cast<std::size_t>(n) * n * n, 0.0);
  for (int p = 0; p < n; ++p) {
    if (u[p] == 0.0) continue;
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          c[(static_cast<std::size_t>(q) * n + r) * n + s] += u[p] * rm(p, q, r, s);
  }
  SquareMatrix b(n);
  for (int q = 0; q < n; ++q)
    for (int s = 0; s < n; ++s) {
      double acc = 0.0;
      for (int r = 0; r < n; ++r) acc += u[r] * c[(static_cast<std::size_t>(q) * n + r) * n + s];
      b(q, s) = acc;
    }

  const auto basis = hyperplane_basis(u);
  SquareMatrix a(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i; j < n - 1; ++j) {
      double acc = 0.0;
      for (int q = 0; q < n; ++q)
        for (int s = 0; s < n; ++s) acc += basis[i][q] * b(q, s) * basis[j][s];
      a(i, j) = acc;
      a(j, i) = acc;
    }
  return a;
}

double ric_k_at(const CurvatureTensor& rm, const std::vector<double>& u, int k) {
  const int n = rm.dim();
  if (k < 1 || k > n - 1) throw RangeError("ric_k_at: k must satisfy 1 <= k <= n-1");
  const std::vector<double> eig = jacobi_eigenvalues(directional_operator(rm, u));
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += eig[i];
  return s;
}

namespace {

struct Descent {
  std::vector<double> direction;
  double value;
};

Descent descend(const CurvatureTensor& rm, std::vector<double> u, int k, double tol) {
  constexpr double kFdStep = 1e-5;
  constexpr int kMaxIters = 200;
  const int n = rm.dim();

  auto eval = [&](const std::vector<double>& dir) { return ric_k_at(rm, dir, k); };
  double f = eval(u);

  double alpha = 0.1;
  for (int iter = 0; iter < kMaxIters && alpha >= tol; ++iter) {
    const auto basis = hyperplane_basis(u);
    std::vector<double> grad(n, 0.0);
    double grad_norm_sq = 0.0;
    for (int a = 0; a < n - 1; ++a) {
      std::vector<double> plus = u, minus = u;
      for (int i = 0; i < n; ++i) {
        plus[i] += kFdStep * basis[a][i];
        minus[i] -= kFdStep * basis[a][i];
      }
      normalize(plus);
      normalize(minus);
      const double g = (eval(plus) - eval(minus)) / (2.0 * kFdStep);
      for (int i = 0; i < n; ++i) grad[i] += g * basis[a][i];
      grad_norm_sq += g * g;
    }
    const double grad_norm = std::sqrt(grad_norm_sq);
    if (grad_norm < 1e-14 * (1.0 + std::fabs(f))) break;

    bool improved = false;
    while (alpha >= tol) {
      std::vector<double> cand = u;
      for (int i = 0; i < n; ++i) cand[i] -= alpha * grad[i] / grad_norm;
      normalize(cand);
      const double fc = eval(cand);
      if (fc < f - 1e-15 * (1.0 + std::fabs(f))) {
        u = std::move(cand);
        f = fc;
        improved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!improved) break;
  }
  canonical_sign(u);
  return Descent{std::move(u), f};
}

}  // namespace

RicKResult ric_k_min(const CurvatureTensor& rm, int k, int restarts, std::uint64_t seed,
                     double tol) {
  const int n = rm.dim();
  if (k < 1 || k > n - 1) throw RangeError("ric_k_min: k must satisfy 1 <= k <= n-1");
  if (restarts < 1) throw RangeError("ric_k_min: restarts must be >= 1");

  std::vector<Descent> runs;
  runs.reserve(restarts);
  for (int r = 0; r < restarts; ++r) {
    // Per-restart seed keeps the result independent of execution order.
    Rng rng(seed + static_cast<std::uint64_t>(r));
    runs.push_back(descend(rm, rng.unit_vector(n), k, tol));
  }

  const Descent* best = &runs[0];
  for (const Descent& d : runs) {
    if (d.value < best->value ||
        (d.value == best->value &&
         std::lexicographical_compare(d.direction.begin(), d.direction.end(),
                                      best->direction.begin(), best->direction.end())))
      best = &d;
  }

  const double agree = 10.0 * tol * (1.0 + std::fabs(best->value));
  int near_best = 0;
  double second_basin = HUGE_VAL;
  for (const Descent& d : runs) {
    if (d.value <= best->value + agree) ++near_best;
    if (direction_distance(d.direction, best->direction) > 0.01)
      second_basin = std::min(second_basin, d.value);
  }
  const bool converged =
      near_best * 2 >= restarts || (second_basin <= best->value + agree);

  RicKResult out;
  out.k = k;
  out.value = best->value;
  out.argmin_direction = best->direction;
  out.restarts_used = restarts;
  out.converged = converged;
  return out;
}

std::vector<std::vector<double>> grid_directions(int dim, int points) {
  std::vector<std::vector<double>> dirs;
  dirs.reserve(points);
  if (dim == 3) {
    // Fibonacci sphere.
    const double golden = 0.6180339887498949;
    for (int i = 0; i < points; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / points;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * M_PI * std::fmod(i * golden, 1.0);
      dirs.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
  } else if (dim == 4) {
    // Hopf-coordinate lattice: uniform in (sin^2 eta, theta1, theta2) with a
    // rank-1 low-discrepancy rule on the two angles.
    const double a1 = 0.7548776662466927;
    const double a2 = 0.5698402909980532;
    for (int i = 0; i < points; ++i) {
      const double t = (i + 0.5) / points;
      const double sin_eta = std::sqrt(t);
      const double cos_eta = std::sqrt(1.0 - t);
      const double th1 = 2.0 * M_PI * std::fmod(i * a1, 1.0);
      const double th2 = 2.0 * M_PI * std::fmod(i * a2, 1.0);
      dirs.push_back({cos_eta * std::cos(th1), cos_eta * std::sin(th1),
                      sin_eta * std::cos(th2), sin_eta * std::sin(th2)});
    }
  } else {
    Rng rng(0xC0FFEEULL + static_cast<std::uint64_t>(dim));
    for (int i = 0; i < points; ++i) dirs.push_back(rng.unit_vector(dim));
  }
  return dirs;
}

GridExtrema ric_k_grid_extrema(const CurvatureTensor& rm, int points) {
  const int n = rm.dim();
  GridExtrema out;
  out.min_by_k.assign(n - 1, HUGE_VAL);
  out.max_by_k.assign(n - 1, -HUGE_VAL);
  for (const auto& u : grid_directions(n, points)) {
    const std::vector<double> eig = jacobi_eigenvalues(directional_operator(rm, u));
    double prefix = 0.0, suffix = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
      prefix += eig[k - 1];
      suffix += eig[n - 1 - k];
      out.min_by_k[k - 1] = std::min(out.min_by_k[k - 1], prefix);
      out.max_by_k[k - 1] = std::max(out.max_by_k[k - 1], suffix);
    }
  }
  return out;
}

}  // namespace curvop
