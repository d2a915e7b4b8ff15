#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace curvop {

// Seeded generator with self-contained uniform/normal transforms so that a
// given seed produces the same stream on every platform (the std::
// distributions are implementation-defined and would break that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  int uniform_int(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  // Standard Gaussian via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Uniform point on the unit sphere in R^n.
  std::vector<double> unit_vector(int n) {
    std::vector<double> v(n);
    double norm_sq = 0.0;
    do {
      norm_sq = 0.0;
      for (int i = 0; i < n; ++i) {
        v[i] = normal();
        norm_sq += v[i] * v[i];
      }
    } while (norm_sq < 1e-30);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < n; ++i) v[i] *= inv;
    return v;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace curvop
