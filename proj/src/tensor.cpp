#include "curvop/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "curvop/errors.hpp"
#include "curvop/rng.hpp"

namespace curvop {

SymTwoTensor::SymTwoTensor(int dim) : dim_(dim), m_(dim) {
  if (dim < 2) throw DimensionError("SymTwoTensor: dim must be >= 2, got " + std::to_string(dim));
}

SymTwoTensor SymTwoTensor::from_matrix(const SquareMatrix& m) {
  SymTwoTensor t(m.size());
  if (m.asymmetry() != 0.0)
    throw ValidationError("SymTwoTensor: input matrix is not exactly symmetric");
  for (int i = 0; i < m.size(); ++i)
    for (int j = i; j < m.size(); ++j) t.set(i, j, m(i, j));
  return t;
}

SymTwoTensor SymTwoTensor::metric(int dim) {
  SymTwoTensor g(dim);
  for (int i = 0; i < dim; ++i) g.set(i, i, 1.0);
  return g;
}

SymTwoTensor& SymTwoTensor::add_scaled(const SymTwoTensor& other, double c) {
  if (other.dim_ != dim_) throw DimensionError("SymTwoTensor::add_scaled: dimension mismatch");
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) set(i, j, (*this)(i, j) + c * other(i, j));
  return *this;
}

SymTwoTensor SymTwoTensor::scaled(double c) const {
  SymTwoTensor out(dim_);
  out.add_scaled(*this, c);
  return out;
}

CurvatureTensor::CurvatureTensor(int dim)
    : dim_(dim), a_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {
  if (dim < 3) throw DimensionError("CurvatureTensor: dim must be >= 3, got " + std::to_string(dim));
}

void CurvatureTensor::set_orbit(int i, int j, int k, int l, double v) {
  a_[flat(i, j, k, l)] = v;
  a_[flat(j, i, k, l)] = -v;
  a_[flat(i, j, l, k)] = -v;
  a_[flat(j, i, l, k)] = v;
  a_[flat(k, l, i, j)] = v;
  a_[flat(l, k, i, j)] = -v;
  a_[flat(k, l, j, i)] = -v;
  a_[flat(l, k, j, i)] = v;
}

CurvatureTensor CurvatureTensor::from_representatives(
    int dim, const std::function<double(int, int, int, int)>& rep) {
  CurvatureTensor t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = i; k < dim; ++k)
        for (int l = k + 1; l < dim; ++l) {
          if (k == i && l < j) continue;  // keep (i,j) <= (k,l)
          t.set_orbit(i, j, k, l, rep(i, j, k, l));
        }
  return t;
}

double CurvatureTensor::full_norm_sq() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

CurvatureTensor& CurvatureTensor::add_scaled(const CurvatureTensor& other, double c) {
  if (other.dim_ != dim_) throw DimensionError("CurvatureTensor::add_scaled: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += c * other.a_[i];
  return *this;
}

CurvatureTensor CurvatureTensor::scaled(double c) const {
  CurvatureTensor out(dim_);
  out.add_scaled(*this, c);
  return out;
}

double CurvatureTensor::bianchi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          const double c = (*this)(i, j, k, l) + (*this)(j, k, i, l) + (*this)(k, i, j, l);
          worst = std::max(worst, std::fabs(c));
        }
  return worst;
}

void CurvatureTensor::validate(double tol, bool check_bianchi) const {
  double scale = 0.0;
  for (double v : a_) scale = std::max(scale, std::fabs(v));
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) {
          const double v = (*this)(i, j, k, l);
          if ((*this)(j, i, k, l) != -v || (*this)(i, j, l, k) != -v)
            throw ValidationError("CurvatureTensor: pair antisymmetry violated at (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(l) + ")");
          if ((*this)(k, l, i, j) != v)
            throw ValidationError("CurvatureTensor: pair exchange symmetry violated at (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(l) + ")");
        }
  if (check_bianchi) {
    const double res = bianchi_residual();
    if (res > tol * (1.0 + scale))
      throw ValidationError("CurvatureTensor: first Bianchi identity residual " +
                            std::to_string(res) + " exceeds tolerance");
  }
}

Frame::Frame(SquareMatrix vectors) : vectors_(std::move(vectors)) {
  const int n = vectors_.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double dot = 0.0;
      for (int c = 0; c < n; ++c) dot += vectors_(i, c) * vectors_(j, c);
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::fabs(dot - want) > 1e-10)
        throw FrameError("Frame: rows are not orthonormal (gram deviation at (" +
                         std::to_string(i) + "," + std::to_string(j) + "))");
    }
  }
}

Frame Frame::standard(int dim) { return Frame(SquareMatrix::identity(dim)); }

CurvatureTensor kulkarni_nomizu(const SymTwoTensor& s, const SymTwoTensor& t) {
  if (s.dim() != t.dim())
    throw DimensionError("kulkarni_nomizu: dimension mismatch (" + std::to_string(s.dim()) +
                         " vs " + std::to_string(t.dim()) + ")");
  // Grouped so the value is bitwise symmetric in (s, t).
  return CurvatureTensor::from_representatives(s.dim(), [&](int i, int j, int k, int l) {
    return (s(i, k) * t(j, l) + s(j, l) * t(i, k)) - (s(i, l) * t(j, k) + s(j, k) * t(i, l));
  });
}

SymTwoTensor ricci_contract(const CurvatureTensor& rm) {
  const int n = rm.dim();
  SymTwoTensor ric(n);
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += rm(i, j, k, j);
      ric.set(i, k, s);
    }
  return ric;
}

double scalar_curvature(const CurvatureTensor& rm) { return ricci_contract(rm).trace(); }

namespace {

// T - (1/3) * (cyclic sum of T over the first three indices); the cyclic sum
// operator c satisfies c(c(T)) = 3 c(T) on pair-symmetric tensors, so this is
// the projection onto the algebraic curvature subspace.
double bianchi_projected(const std::vector<double>& raw, int n, int i, int j, int k, int l) {
  auto at = [&](int a, int b, int c, int d) {
    return raw[((static_cast<std::size_t>(a) * n + b) * n + c) * n + d];
  };
  const double cyc = at(i, j, k, l) + at(j, k, i, l) + at(k, i, j, l);
  return at(i, j, k, l) - cyc / 3.0;
}

}  // namespace

CurvatureTensor symmetrize_random(std::uint64_t seed, int dim) {
  if (dim < 3) throw DimensionError("symmetrize_random: dim must be >= 3");
  const int n = dim;
  Rng rng(seed);
  const std::size_t total = static_cast<std::size_t>(n) * n * n * n;
  std::vector<double> raw(total);
  for (double& v : raw) v = rng.normal();

  auto at = [&](std::vector<double>& arr, int i, int j, int k, int l) -> double& {
    return arr[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  };

  // Antisymmetrize both index pairs, then symmetrize the pair exchange.
  std::vector<double> sym(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double anti_front = 0.25 * (at(raw, i, j, k, l) - at(raw, j, i, k, l) -
                                            at(raw, i, j, l, k) + at(raw, j, i, l, k));
          const double anti_back = 0.25 * (at(raw, k, l, i, j) - at(raw, l, k, i, j) -
                                           at(raw, k, l, j, i) + at(raw, l, k, j, i));
          at(sym, i, j, k, l) = 0.5 * (anti_front + anti_back);
        }

  // Bianchi projection, then a rebuild from representatives so the pair
  // symmetries are exact rather than within rounding.
  return CurvatureTensor::from_representatives(n, [&](int i, int j, int k, int l) {
    return bianchi_projected(sym, n, i, j, k, l);
  });
}

CurvatureTensor rotate(const CurvatureTensor& rm, const Frame& frame) {
  const int n = rm.dim();
  if (frame.dim() != n) throw DimensionError("rotate: frame dimension mismatch");
  const std::size_t total = static_cast<std::size_t>(n) * n * n * n;
  std::vector<double> cur(total), next(total);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          cur[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = rm(i, j, k, l);

  // Contract one index per stage against the frame rows.
  for (int stage = 0; stage < 4; ++stage) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p) {
        const double f = frame(a, p);
        if (f == 0.0) continue;
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
              // Index being contracted is always the first; the stages rotate
              // the tensor so each original index takes a turn.
              next[((static_cast<std::size_t>(b) * n + c) * n + d) * n + a] +=
                  f * cur[((static_cast<std::size_t>(p) * n + b) * n + c) * n + d];
            }
      }
    std::swap(cur, next);
  }

  return CurvatureTensor::from_representatives(n, [&](int i, int j, int k, int l) {
    return cur[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
  });
}

}  // namespace curvop
