#include "curvop/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "curvop/bivector.hpp"
#include "curvop/bounds.hpp"
#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"
#include "curvop/ricci_k.hpp"

namespace curvop {

double CurvatureField::total_volume() const {
  double v = 0.0;
  for (const Sample& s : samples) v += s.weight;
  return v;
}

CurvatureField CurvatureField::from_samples(std::vector<Sample> samples) {
  if (samples.empty()) throw EmptyFieldError("CurvatureField: no samples");
  CurvatureField f;
  f.dim = samples.front().tensor.dim();
  for (const Sample& s : samples) {
    if (s.tensor.dim() != f.dim)
      throw DimensionError("CurvatureField: samples have mixed dimensions");
    if (!(s.weight > 0.0)) throw PreconditionError("CurvatureField: weights must be > 0");
  }
  f.samples = std::move(samples);
  return f;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::hypotheses_met: return "hypotheses_met";
    case Verdict::not_met: return "not_met";
    case Verdict::degenerate: return "degenerate";
  }
  return "?";
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

double lp_norm(const CurvatureField& field,
               const std::function<double(const CurvatureTensor&)>& quantity, double p) {
  if (field.samples.empty()) throw EmptyFieldError("lp_norm: empty field");
  if (p < 1.0) throw RangeError("lp_norm: p must be >= 1");
  double acc = 0.0;
  for (const auto& s : field.samples) acc += s.weight * std::pow(quantity(s.tensor), p);
  return std::pow(acc, 1.0 / p);
}

double prop43_lower_bound(int n, double a, double volume) {
  if (n < 3) throw RangeError("prop43_lower_bound: n must be >= 3");
  if (!(a > 0.0) || !(volume > 0.0))
    throw RangeError("prop43_lower_bound: a and volume must be positive");
  return static_cast<double>(n) * (n - 1) * a * std::pow(volume, 2.0 / n);
}

const std::vector<std::string>& pointwise_theorems() {
  static const std::vector<std::string> ids = {
      "thm14_pos", "thm14_neg",  "cor34",          "cor25_lcf", "thm27_lcf",
      "thm210_lcf", "cor28_quasipos", "diam_betti_hyp", "ht25_hyp"};
  return ids;
}

const std::vector<std::string>& field_theorems() {
  static const std::vector<std::string> ids = {
      "thm15", "thm16", "cor17", "gb4", "prop43_yamabe_lb", "thm19_gap1", "thm19_gap2"};
  return ids;
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Collects the strict / non-strict hypothesis margins and resolves the
// verdict: any decisive failure wins, otherwise any boundary case makes the
// report degenerate.
class Hypotheses {
 public:
  explicit Hypotheses(CertificateReport* report) : report_(report) {}

  // lhs < rhs required, margin = rhs - lhs.
  void strict(const std::string& name, double margin, double ref) {
    report_->hypothesis_values[name + "_margin"] = margin;
    const double tol = 1e-9 * (1.0 + std::fabs(ref));
    if (margin < -tol)
      ++failed_;
    else if (margin <= tol)
      ++degenerate_;
  }

  // lhs <= rhs required; the boundary counts as met.
  void nonstrict(const std::string& name, double margin, double ref) {
    report_->hypothesis_values[name + "_margin"] = margin;
    const double tol = 1e-9 * (1.0 + std::fabs(ref));
    if (margin < -tol) ++failed_;
  }

  void fail(const std::string& why) {
    ++failed_;
    report_->notes.push_back(why);
  }

  Verdict verdict() const {
    if (failed_ > 0) return Verdict::not_met;
    if (degenerate_ > 0) return Verdict::degenerate;
    return Verdict::hypotheses_met;
  }

 private:
  CertificateReport* report_;
  int failed_ = 0;
  int degenerate_ = 0;
};

struct PointwiseData {
  DecomposedCurvature dec;
  double rm_norm_sq;
  double weyl_norm;
  double ric0_norm;
  SpectralSummary spec;
};

PointwiseData analyze(const CurvatureTensor& rm) {
  DecomposedCurvature dec = orthogonal_decompose(rm);
  const double w = std::sqrt(dec.weyl.full_norm_sq());
  const double r0 = std::sqrt(dec.traceless_ricci.full_norm_sq());
  SpectralSummary spec = spectrum(curvature_operator(rm, Frame::standard(rm.dim())));
  return PointwiseData{std::move(dec), rm.full_norm_sq(), w, r0, std::move(spec)};
}

bool locally_conformally_flat(const PointwiseData& d) {
  return d.weyl_norm * d.weyl_norm < 1e-9 * (1.0 + d.rm_norm_sq);
}

std::string betti_vanish(int upto) {
  return "b_p(M) = 0 for all 1 <= p <= " + std::to_string(upto);
}

double min_sectional(const CurvatureTensor& rm, const CertifyOptions& opts,
                     CertificateReport* report) {
  RicKResult r = ric_k_min(rm, 1, opts.restarts, opts.seed, 1e-8);
  if (!r.converged)
    report->notes.push_back("sectional minimum search did not self-report convergence");
  return r.value;
}

void note_computed_a(CertificateReport* report, const CertifyOptions& opts) {
  report->notes.push_back("a computed by multi-start search (restarts=" +
                          std::to_string(opts.restarts) + ", seed=" +
                          std::to_string(opts.seed) + ")");
}

CertificateReport certify_thm14(const CurvatureTensor& rm, bool positive,
                                const CertifyOptions& opts) {
  const int n = rm.dim();
  CertificateReport rep;
  rep.theorem_id = positive ? "thm14_pos" : "thm14_neg";
  rep.inputs["n"] = n;
  const PointwiseData d = analyze(rm);

  double a;
  double sec_extreme;  // min sec for the positive branch, max sec for the negative
  if (positive) {
    sec_extreme = min_sectional(rm, opts, &rep);
    a = opts.a ? *opts.a : sec_extreme;
  } else {
    sec_extreme = -min_sectional(rm.scaled(-1.0), opts, &rep);
    a = opts.a ? *opts.a : -sec_extreme;
  }
  if (!opts.a) note_computed_a(&rep, opts);
  rep.inputs["a"] = a;
  rep.inputs["k"] = 1;

  const double coeff = threshold(ThresholdKind::thm14, n);
  rep.threshold = coeff * a;
  rep.hypothesis_values["a"] = a;
  rep.hypothesis_values["weyl_norm"] = d.weyl_norm;
  rep.hypothesis_values[positive ? "min_sec" : "max_sec"] = sec_extreme;

  Hypotheses hyp(&rep);
  hyp.strict("a_positive", a, 0.0);
  if (positive)
    hyp.nonstrict("sec_lower_bound", sec_extreme - a, a);
  else
    hyp.nonstrict("sec_upper_bound", -a - sec_extreme, a);
  rep.margin = rep.threshold - d.weyl_norm;
  hyp.strict("weyl_pinching", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();

  if (positive) {
    rep.conclusion_text = "curvature operator positive; chi(M) > 0";
    rep.hypothesis_values["mu_1"] = d.spec.eigenvalues.front();
    if (rep.verdict == Verdict::hypotheses_met && !(d.spec.eigenvalues.front() > 0.0))
      rep.notes.push_back("SPECTRAL CROSS-CHECK FAILED: mu_1 = " +
                          fmt(d.spec.eigenvalues.front()));
  } else {
    rep.conclusion_text = "curvature operator negative; (-1)^n chi(M) > 0";
    rep.hypothesis_values["mu_N"] = d.spec.eigenvalues.back();
    if (rep.verdict == Verdict::hypotheses_met && !(d.spec.eigenvalues.back() < 0.0))
      rep.notes.push_back("SPECTRAL CROSS-CHECK FAILED: mu_N = " +
                          fmt(d.spec.eigenvalues.back()));
  }
  if (n % 2 != 0)
    rep.notes.push_back("Euler-characteristic conclusion stated for even dimension");
  rep.notes.push_back(
      "threshold constant read with n = manifold dimension; equals the k=1 "
      "operator-count threshold exactly");
  return rep;
}

CertificateReport certify_cor34(const CurvatureTensor& rm, const CertifyOptions& opts) {
  const int n = rm.dim();
  const int k = opts.k;
  const int big_n = n * (n - 1) / 2;
  if (k < 1 || k > n - 1) throw UsageError("cor34: k must satisfy 1 <= k <= n-1");
  (void)big_n;
  CertificateReport rep;
  rep.theorem_id = "cor34";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;
  const PointwiseData d = analyze(rm);

  double a, min_sec;
  if (opts.a) {
    a = *opts.a;
    min_sec = min_sectional(rm, opts, &rep);
  } else {
    a = min_sectional(rm, opts, &rep);
    min_sec = a;
    note_computed_a(&rep, opts);
  }
  rep.inputs["a"] = a;

  rep.threshold = threshold(ThresholdKind::cor34, n, k) * a;
  rep.hypothesis_values["a"] = a;
  rep.hypothesis_values["min_sec"] = min_sec;
  rep.hypothesis_values["weyl_norm"] = d.weyl_norm;
  rep.hypothesis_values["prefix_sum_k"] = d.spec.prefix(k);

  Hypotheses hyp(&rep);
  hyp.strict("a_positive", a, 0.0);
  hyp.nonstrict("sec_lower_bound", min_sec - a, a);
  rep.margin = rep.threshold - d.weyl_norm;
  hyp.strict("weyl_pinching", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();

  const int half = (n + 1) / 2;  // ceil(n/2)
  rep.conclusion_text = "curvature operator is " + std::to_string(k) + "-positive; " +
                        (k <= half ? betti_vanish(n - 1) : betti_vanish(n - k));
  if (rep.verdict == Verdict::hypotheses_met && !(d.spec.prefix(k) > 0.0))
    rep.notes.push_back("SPECTRAL CROSS-CHECK FAILED: mu_1+...+mu_k = " + fmt(d.spec.prefix(k)));
  return rep;
}

CertificateReport certify_cor25(const CurvatureTensor& rm, const CertifyOptions&) {
  const int n = rm.dim();
  CertificateReport rep;
  rep.theorem_id = "cor25_lcf";
  rep.inputs["n"] = n;
  const PointwiseData d = analyze(rm);
  rep.hypothesis_values["weyl_norm_sq"] = d.weyl_norm * d.weyl_norm;

  Hypotheses hyp(&rep);
  const double gate = 1e-9 * (1.0 + d.rm_norm_sq);
  rep.threshold = gate;
  rep.margin = gate - d.weyl_norm * d.weyl_norm;
  if (!locally_conformally_flat(d))
    hyp.fail("not locally conformally flat: |W|^2 above tolerance");

  // lambda_ij list from the Ricci eigenvalues.
  const auto [frame, lambdas] = ricci_eigenframe(d.dec.ricci);
  (void)frame;
  double r = 0.0;
  for (double l : lambdas) r += l;
  std::vector<double> lam_ij;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      lam_ij.push_back((lambdas[i] + lambdas[j] - r / (n - 1)) / (n - 2));
  std::sort(lam_ij.begin(), lam_ij.end());

  double worst = 0.0;
  for (std::size_t i = 0; i < lam_ij.size(); ++i)
    worst = std::max(worst, std::fabs(lam_ij[i] - d.spec.eigenvalues[i]));
  rep.hypothesis_values["spectrum_match_residual"] = worst;
  rep.hypothesis_values["lambda_ij_min"] = lam_ij.front();
  rep.hypothesis_values["lambda_ij_max"] = lam_ij.back();
  if (worst > 1e-8 * (1.0 + std::fabs(lam_ij.back()) + std::fabs(lam_ij.front())))
    rep.notes.push_back("spectrum does not match the lambda_ij list: residual " + fmt(worst));

  rep.verdict = hyp.verdict();
  rep.conclusion_text =
      "curvature operator eigenvalues are lambda_ij = (lambda_i + lambda_j - R/(n-1))/(n-2) "
      "over pairs i < j";
  return rep;
}

CertificateReport certify_thm27(const CurvatureTensor& rm, const CertifyOptions&) {
  const int n = rm.dim();
  CertificateReport rep;
  rep.theorem_id = "thm27_lcf";
  rep.inputs["n"] = n;
  const PointwiseData d = analyze(rm);
  rep.hypothesis_values["weyl_norm_sq"] = d.weyl_norm * d.weyl_norm;

  Hypotheses hyp(&rep);
  if (!locally_conformally_flat(d)) {
    hyp.fail("not locally conformally flat: |W|^2 above tolerance");
    rep.verdict = hyp.verdict();
    rep.conclusion_text = "no conclusion";
    return rep;
  }

  const auto [lo, hi] = sectional_range(rm);
  rep.hypothesis_values["sec_min"] = lo;
  rep.hypothesis_values["sec_max"] = hi;
  const double tol = 1e-9 * (1.0 + std::max(std::fabs(lo), std::fabs(hi)));

  const bool even = (n % 2 == 0);
  std::string conclusion;
  if (lo > tol) {
    rep.margin = lo;
    conclusion = betti_vanish(n - 1);
    if (even) conclusion += "; chi(M) = 2";
  } else if (hi < -tol) {
    rep.margin = -hi;
    conclusion = even ? "(-1)^(n/2) chi(M) > 0" : "no even-dimension constraint";
  } else if (std::fabs(lo) <= tol && std::fabs(hi) <= tol) {
    conclusion = even ? "chi(M) = 0" : "no even-dimension constraint";
  } else if (lo >= -tol) {
    conclusion = even ? "chi(M) >= 0" : "no even-dimension constraint";
  } else if (hi <= tol) {
    conclusion = even ? "(-1)^(n/2) chi(M) >= 0" : "no even-dimension constraint";
  } else {
    hyp.fail("sectional curvature is indefinite: no sign hypothesis applies");
    conclusion = "no conclusion";
  }
  if (!even)
    rep.notes.push_back("Euler-characteristic conclusions stated for even dimension");
  rep.verdict = hyp.verdict();
  rep.conclusion_text = conclusion;
  return rep;
}

CertificateReport certify_thm210(const CurvatureTensor& rm, const CertifyOptions& opts) {
  const int n = rm.dim();
  const int k = opts.k;
  if (k < 1 || k > n - 1) throw UsageError("thm210_lcf: k must satisfy 1 <= k <= n-1");
  CertificateReport rep;
  rep.theorem_id = "thm210_lcf";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;
  const PointwiseData d = analyze(rm);
  rep.hypothesis_values["weyl_norm_sq"] = d.weyl_norm * d.weyl_norm;

  Hypotheses hyp(&rep);
  if (!locally_conformally_flat(d))
    hyp.fail("not locally conformally flat: |W|^2 above tolerance");

  double ric_k;
  if (opts.a) {
    ric_k = k * *opts.a;
    rep.inputs["a"] = *opts.a;
  } else {
    RicKResult r = ric_k_min(rm, k, opts.restarts, opts.seed);
    ric_k = r.value;
    if (!r.converged) rep.notes.push_back("Ric_k search did not self-report convergence");
    note_computed_a(&rep, opts);
  }
  rep.hypothesis_values["ric_k_min"] = ric_k;
  rep.hypothesis_values["prefix_sum_k"] = d.spec.prefix(k);
  rep.margin = ric_k;
  hyp.strict("ric_k_positive", ric_k, 0.0);
  rep.verdict = hyp.verdict();

  const int half = (n + 1) / 2;
  rep.conclusion_text = "curvature operator is " + std::to_string(k) + "-positive; " +
                        (k <= half ? betti_vanish(n - 1)
                                   : "b_1(M) = ... = b_" + std::to_string(n - k) + "(M)");
  if (rep.verdict == Verdict::hypotheses_met && !(d.spec.prefix(k) > 0.0))
    rep.notes.push_back(
        "k-positivity cross-check failed: mu_1+...+mu_k = " + fmt(d.spec.prefix(k)) +
        "; certificate withheld (counterexample candidate)");
  return rep;
}

CertificateReport certify_cor28(const CurvatureTensor& rm, const CertifyOptions&) {
  const int n = rm.dim();
  CertificateReport rep;
  rep.theorem_id = "cor28_quasipos";
  rep.inputs["n"] = n;
  const PointwiseData d = analyze(rm);
  rep.hypothesis_values["weyl_norm_sq"] = d.weyl_norm * d.weyl_norm;

  Hypotheses hyp(&rep);
  if (!locally_conformally_flat(d))
    hyp.fail("not locally conformally flat: |W|^2 above tolerance");

  const auto [frame, lambdas] = ricci_eigenframe(d.dec.ricci);
  (void)frame;
  const double q = quasi_positive_quantity(lambdas, d.dec.scalar, n);
  rep.hypothesis_values["quasi_positive_quantity"] = q;
  rep.margin = q;
  hyp.strict("quantity_positive", q, 0.0);
  rep.verdict = hyp.verdict();

  rep.conclusion_text = "M is diffeomorphic to a spherical space form";
  if (n == 4 || n == 6)
    rep.conclusion_text += "; conformally equivalent to the round sphere";
  rep.notes.push_back(
      "quasi-positivity needs the quantity >= 0 everywhere and > 0 somewhere; this "
      "certificate witnesses strict positivity at the given point");
  return rep;
}

CertificateReport certify_diam_betti(const CurvatureTensor& rm, const CertifyOptions& opts) {
  const int n = rm.dim();
  const int k = opts.k;
  const int half = (n + 1) / 2;
  if (k < half || k > n - 1)
    throw UsageError("diam_betti_hyp: k must satisfy ceil(n/2) <= k <= n-1");
  if (!opts.a) throw UsageError("diam_betti_hyp: the level constant a is required");
  const double a = *opts.a;

  CertificateReport rep;
  rep.theorem_id = "diam_betti_hyp";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;
  rep.inputs["a"] = a;
  const PointwiseData d = analyze(rm);

  RicKResult r = ric_k_min(rm, k, opts.restarts, opts.seed);
  if (!r.converged) rep.notes.push_back("Ric_k search did not self-report convergence");
  const double big_n = n * (n - 1) / 2.0;
  const double quantity =
      r.value - std::sqrt(k * (big_n - k) / big_n) * d.weyl_norm;
  rep.hypothesis_values["ric_k_min"] = r.value;
  rep.hypothesis_values["weyl_norm"] = d.weyl_norm;
  rep.hypothesis_values["hypothesis_quantity"] = quantity;
  rep.threshold = k * a;
  rep.margin = quantity - k * a;

  Hypotheses hyp(&rep);
  hyp.nonstrict("quantity_at_least_ka", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();
  rep.conclusion_text = "b_p(M) <= binom(n,p) exp(C(n, a D^2) sqrt(-a D^2 p(n-p))) for 1 <= p <= " +
                        std::to_string(n - k);
  rep.notes.push_back("constant C(n, a D^2) is not effective; bound value not computed");
  rep.notes.push_back("diameter bound diam(M) <= D is a user-level assumption");
  return rep;
}

CertificateReport certify_ht25(const CurvatureTensor& rm, const CertifyOptions& opts) {
  const int n = rm.dim();
  if (n % 2 != 0) throw UsageError("ht25_hyp: dimension must be even");
  const int half = n / 2;
  if (half < 3)
    throw RangeError("ht25_hyp: printed coefficient is imaginary below dimension 6");
  if (opts.k != 1 && opts.k != half)
    throw UsageError("ht25_hyp: k is fixed to dim/2 by the statement");

  CertificateReport rep;
  rep.theorem_id = "ht25_hyp";
  rep.inputs["n"] = n;
  rep.inputs["k"] = half;
  const PointwiseData d = analyze(rm);

  RicKResult r = ric_k_min(rm, half, opts.restarts, opts.seed);
  if (!r.converged) rep.notes.push_back("Ric_k search did not self-report convergence");
  const double coeff = std::sqrt(static_cast<double>(half) * (half - 3) / (half - 1));
  const double quantity = r.value - coeff * d.weyl_norm;
  rep.hypothesis_values["ric_half_min"] = r.value;
  rep.hypothesis_values["weyl_norm"] = d.weyl_norm;
  rep.hypothesis_values["hypothesis_quantity"] = quantity;
  rep.margin = quantity;

  Hypotheses hyp(&rep);
  hyp.nonstrict("quantity_nonnegative", quantity, 0.0);
  rep.verdict = hyp.verdict();
  rep.conclusion_text = "chi(M) = 0";
  rep.notes.push_back("b_1(M) >= 1 is a user-level assumption");
  rep.notes.push_back(
      "epsilon(n) is not effective: a nonnegative quantity satisfies the hypothesis for any "
      "diameter; a negative one is undecidable here");
  rep.notes.push_back(
      "coefficient sqrt(h(h-3)/(h-1)) with h = dim/2 read verbatim; it differs from the "
      "zero-sum bound coefficient the eigenvalue route would give");
  return rep;
}

}  // namespace

CertificateReport certify_pointwise(const CurvatureTensor& rm, const std::string& theorem,
                                    const CertifyOptions& opts) {
  if (theorem == "thm14_pos") return certify_thm14(rm, true, opts);
  if (theorem == "thm14_neg") return certify_thm14(rm, false, opts);
  if (theorem == "cor34") return certify_cor34(rm, opts);
  if (theorem == "cor25_lcf") return certify_cor25(rm, opts);
  if (theorem == "thm27_lcf") return certify_thm27(rm, opts);
  if (theorem == "thm210_lcf") return certify_thm210(rm, opts);
  if (theorem == "cor28_quasipos") return certify_cor28(rm, opts);
  if (theorem == "diam_betti_hyp") return certify_diam_betti(rm, opts);
  if (theorem == "ht25_hyp") return certify_ht25(rm, opts);
  throw UsageError("certify_pointwise: unknown theorem '" + theorem + "'");
}

namespace {

struct SampleData {
  double weyl_norm = 0.0;
  double pinching = 0.0;
  double scalar = 0.0;
  double min_ricci_eig = 0.0;
  double ric_k = 0.0;  // filled only when requested
  bool ric_k_converged = true;
};

std::vector<SampleData> analyze_field(const CurvatureField& field, int k_for_rick,
                                      const CertifyOptions& opts) {
  std::vector<SampleData> data(field.samples.size());
  parallel_for(static_cast<int>(field.samples.size()), opts.threads, [&](int i) {
    const CurvatureTensor& rm = field.samples[i].tensor;
    const DecomposedCurvature dec = orthogonal_decompose(rm);
    SampleData& d = data[i];
    d.weyl_norm = std::sqrt(dec.weyl.full_norm_sq());
    d.pinching = pinching_quantity(dec);
    d.scalar = dec.scalar;
    d.min_ricci_eig = jacobi_eigenvalues(dec.ricci.matrix()).front();
    if (k_for_rick > 0) {
      RicKResult r = ric_k_min(rm, k_for_rick, opts.restarts,
                               opts.seed + static_cast<std::uint64_t>(i));
      d.ric_k = r.value;
      d.ric_k_converged = r.converged;
    }
  });
  return data;
}

double resolve_yamabe(const CurvatureField& field, const CertifyOptions& opts,
                      CertificateReport* rep) {
  if (opts.yamabe) return *opts.yamabe;
  if (opts.a && *opts.a > 0.0) {
    const double lb = prop43_lower_bound(field.dim, *opts.a, field.total_volume());
    rep->notes.push_back("Yamabe constant replaced by its lower bound n(n-1) a Vol^{2/n} = " +
                         fmt(lb) + " derived from the supplied Ricci level");
    return lb;
  }
  throw UsageError(rep->theorem_id + ": Yamabe constant required (supply it, or a Ricci "
                                     "level a > 0 to derive a lower bound)");
}

CertificateReport certify_thm15(const CurvatureField& field, const CertifyOptions& opts) {
  const int n = field.dim;
  const int k = opts.k;
  if (k < 1 || k > n - 1) throw UsageError("thm15: k must satisfy 1 <= k <= n-1");
  CertificateReport rep;
  rep.theorem_id = "thm15";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;

  const auto data = analyze_field(field, k, opts);
  double min_rick = HUGE_VAL;
  bool all_converged = true;
  for (const auto& d : data) {
    min_rick = std::min(min_rick, d.ric_k);
    all_converged = all_converged && d.ric_k_converged;
  }
  if (!all_converged) rep.notes.push_back("Ric_k search did not self-report convergence");

  double a;
  if (opts.a) {
    a = *opts.a;
  } else {
    a = min_rick / k;
    note_computed_a(&rep, opts);
  }
  rep.inputs["a"] = a;
  rep.hypothesis_values["a"] = a;
  rep.hypothesis_values["field_ric_k_min"] = min_rick;

  const double vol = field.total_volume();
  const double p = n / 2.0;
  const double weyl_lp =
      lp_norm(field, [](const CurvatureTensor& t) { return std::sqrt(weyl(t).full_norm_sq()); },
              p);
  const double lhs = weyl_lp / std::pow(vol, 1.0 / p);
  // The unnormalized L^{n/2} norm is the homothety invariant; the
  // volume-normalized hypothesis quantity scales like the curvature level a.
  rep.hypothesis_values["weyl_lp"] = weyl_lp;
  rep.hypothesis_values["weyl_lp_normalized"] = lhs;
  rep.threshold = threshold(ThresholdKind::thm15, n, k) * a;
  rep.margin = rep.threshold - lhs;

  Hypotheses hyp(&rep);
  hyp.strict("a_positive", a, 0.0);
  hyp.nonstrict("ric_k_lower_bound", min_rick - k * a, k * a);
  hyp.strict("weyl_integral_pinching", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();

  const int half = (n + 1) / 2;
  if (k <= half) {
    rep.conclusion_text = betti_vanish(n - 1);
  } else {
    rep.conclusion_text = "b_1(M) = ... = b_" + std::to_string(n - k) + "(M)";
    rep.notes.push_back("the common value of these Betti numbers is not pinned down");
  }
  return rep;
}

CertificateReport certify_thm16(const CurvatureField& field, const CertifyOptions& opts) {
  const int n = field.dim;
  const int k = opts.k;
  if (n < 8) throw UsageError("thm16: stated for n >= 8");
  if (k < 1 || k > n - 1) throw UsageError("thm16: k must satisfy 1 <= k <= n-1");
  CertificateReport rep;
  rep.theorem_id = "thm16";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;

  const double yamabe = resolve_yamabe(field, opts, &rep);
  rep.inputs["yamabe"] = yamabe;
  rep.hypothesis_values["yamabe"] = yamabe;

  const double p = n / 2.0;
  const double lhs = lp_norm(
      field, [](const CurvatureTensor& t) { return pinching_quantity(orthogonal_decompose(t)); },
      p);
  rep.hypothesis_values["pinching_lp"] = lhs;
  rep.threshold = threshold(ThresholdKind::thm16, n, k) * yamabe;
  rep.margin = rep.threshold - lhs;

  Hypotheses hyp(&rep);
  hyp.strict("yamabe_positive", yamabe, 0.0);
  hyp.strict("pinching_integral", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();

  const int half = (n + 1) / 2;
  const int upto = (k <= half) ? (half - 2) : std::min(half - 2, n - k);
  rep.conclusion_text = betti_vanish(upto);
  return rep;
}

CertificateReport certify_cor17(const CurvatureField& field, const CertifyOptions& opts) {
  const int n = field.dim;
  const int k = opts.k;
  if (n < 4) throw UsageError("cor17: stated for n >= 4");
  if (k < 1 || k > n - 1) throw UsageError("cor17: k must satisfy 1 <= k <= n-1");
  CertificateReport rep;
  rep.theorem_id = "cor17";
  rep.inputs["n"] = n;
  rep.inputs["k"] = k;

  const double yamabe = resolve_yamabe(field, opts, &rep);
  rep.inputs["yamabe"] = yamabe;
  rep.hypothesis_values["yamabe"] = yamabe;

  const auto data = analyze_field(field, 0, opts);
  double min_scalar = HUGE_VAL;
  for (const auto& d : data) min_scalar = std::min(min_scalar, d.scalar);
  rep.hypothesis_values["min_scalar"] = min_scalar;

  const double p = n / 2.0;
  const double lhs = lp_norm(
      field, [](const CurvatureTensor& t) { return pinching_quantity(orthogonal_decompose(t)); },
      p);
  rep.hypothesis_values["pinching_lp"] = lhs;
  rep.threshold = threshold(ThresholdKind::cor17, n, k) * yamabe;
  rep.margin = rep.threshold - lhs;

  Hypotheses hyp(&rep);
  hyp.strict("yamabe_positive", yamabe, 0.0);
  hyp.strict("scalar_positive", min_scalar, 0.0);
  hyp.strict("pinching_integral", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();

  const int half = (n + 1) / 2;
  rep.conclusion_text = (k <= half + 1) ? betti_vanish(n - 1) : betti_vanish(n - k);
  return rep;
}

CertificateReport certify_gb4(const CurvatureField& field, const CertifyOptions& opts) {
  const int n = field.dim;
  if (n != 4) throw UsageError("gb4: stated for dimension 4");
  CertificateReport rep;
  rep.theorem_id = "gb4";
  rep.inputs["n"] = n;

  const auto data = analyze_field(field, 0, opts);
  double min_ricci = HUGE_VAL;
  for (const auto& d : data) min_ricci = std::min(min_ricci, d.min_ricci_eig);
  rep.hypothesis_values["min_ricci_eigenvalue"] = min_ricci;

  double integral = 0.0;
  for (std::size_t i = 0; i < field.samples.size(); ++i)
    integral += field.samples[i].weight * data[i].weyl_norm * data[i].weyl_norm;
  rep.hypothesis_values["weyl_l2_integral"] = integral;
  rep.threshold = threshold(ThresholdKind::gb4);
  rep.margin = rep.threshold - integral;

  Hypotheses hyp(&rep);
  hyp.strict("ricci_positive", min_ricci, 0.0);
  hyp.strict("weyl_l2_below_8pi2", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();
  rep.conclusion_text = "chi(M) = 2";
  return rep;
}

CertificateReport certify_prop43(const CurvatureField& field, const CertifyOptions& opts) {
  const int n = field.dim;
  CertificateReport rep;
  rep.theorem_id = "prop43_yamabe_lb";
  rep.inputs["n"] = n;

  double a;
  if (opts.a) {
    a = *opts.a;
  } else {
    const auto data = analyze_field(field, 0, opts);
    double min_ricci = HUGE_VAL;
    for (const auto& d : data) min_ricci = std::min(min_ricci, d.min_ricci_eig);
    a = min_ricci / (n - 1);
    rep.notes.push_back("a derived from the smallest sampled Ricci eigenvalue / (n-1)");
  }
  const double vol = field.total_volume();
  rep.inputs["a"] = a;
  rep.inputs["volume"] = vol;
  rep.hypothesis_values["a"] = a;

  Hypotheses hyp(&rep);
  hyp.strict("a_positive", a, 0.0);
  rep.verdict = hyp.verdict();
  if (a > 0.0) {
    const double bound = prop43_lower_bound(n, a, vol);
    rep.threshold = bound;
    rep.margin = bound;
    rep.hypothesis_values["yamabe_lower_bound"] = bound;
    rep.hypothesis_values["normalized_volume_term"] = a * std::pow(vol, 2.0 / n);
    rep.conclusion_text = "lambda(g) >= n(n-1) a Vol(g)^{2/n} = " + fmt(bound);
    rep.notes.push_back(
        "derived record: a Vol^{2/n} <= lambda(g)/(n(n-1)) whenever Ric >= (n-1) a");
  } else {
    rep.conclusion_text = "no bound (requires a > 0)";
  }
  return rep;
}

CertificateReport certify_thm19(const CurvatureField& field, bool gap1,
                                const CertifyOptions& opts) {
  const int n = field.dim;
  const int k = opts.k;
  CertificateReport rep;
  rep.theorem_id = gap1 ? "thm19_gap1" : "thm19_gap2";
  rep.inputs["n"] = n;

  if (!opts.harmonic_weyl)
    throw UsageError(rep.theorem_id + ": requires the harmonic-Weyl assertion");
  rep.notes.push_back("harmonic Weyl curvature asserted by the user, not verified");

  Hypotheses hyp(&rep);
  double lhs;
  const double p = n / 2.0;
  double max_weyl = 0.0;

  if (gap1) {
    if (n < 4) throw UsageError("thm19_gap1: stated for n >= 4");
    if (k < 1 || k > (n - 1) / 2)
      throw UsageError("thm19_gap1: k must satisfy 1 <= k <= floor((n-1)/2)");
    rep.inputs["k"] = k;

    const auto data = analyze_field(field, k, opts);
    double min_rick = HUGE_VAL;
    bool all_converged = true;
    for (const auto& d : data) {
      min_rick = std::min(min_rick, d.ric_k);
      max_weyl = std::max(max_weyl, d.weyl_norm);
      all_converged = all_converged && d.ric_k_converged;
    }
    if (!all_converged) rep.notes.push_back("Ric_k search did not self-report convergence");

    double a;
    if (opts.a) {
      a = *opts.a;
    } else {
      a = min_rick / k;
      note_computed_a(&rep, opts);
    }
    rep.inputs["a"] = a;
    rep.hypothesis_values["a"] = a;
    rep.hypothesis_values["field_ric_k_min"] = min_rick;
    hyp.strict("a_positive", a, 0.0);
    hyp.nonstrict("ric_k_lower_bound", min_rick - k * a, k * a);

    const double vol = field.total_volume();
    const double weyl_lp = lp_norm(
        field, [](const CurvatureTensor& t) { return std::sqrt(weyl(t).full_norm_sq()); }, p);
    lhs = weyl_lp / std::pow(vol, 1.0 / p);
    rep.hypothesis_values["weyl_lp"] = weyl_lp;
    rep.hypothesis_values["weyl_lp_normalized"] = lhs;
    rep.threshold = threshold(ThresholdKind::thm19_gap1, n, k) * a;
  } else {
    if (n < 8) throw UsageError("thm19_gap2: stated for n >= 8");
    const double yamabe = resolve_yamabe(field, opts, &rep);
    rep.inputs["yamabe"] = yamabe;
    rep.hypothesis_values["yamabe"] = yamabe;
    hyp.strict("yamabe_positive", yamabe, 0.0);

    const auto data = analyze_field(field, 0, opts);
    for (const auto& d : data) max_weyl = std::max(max_weyl, d.weyl_norm);
    lhs = lp_norm(
        field,
        [](const CurvatureTensor& t) { return pinching_quantity(orthogonal_decompose(t)); }, p);
    rep.hypothesis_values["pinching_lp"] = lhs;
    rep.threshold = threshold(ThresholdKind::thm19_gap2, n) * yamabe;
  }

  rep.margin = rep.threshold - lhs;
  hyp.strict("below_gap", rep.margin, rep.threshold);
  rep.verdict = hyp.verdict();
  rep.conclusion_text = "Weyl tensor vanishes identically";

  rep.hypothesis_values["max_sample_weyl_norm"] = max_weyl;
  if (rep.verdict == Verdict::hypotheses_met && max_weyl * max_weyl > 1e-9)
    rep.notes.push_back(
        "paper-contradiction candidate: certificate concludes W = 0 but the field has "
        "|W| up to " + fmt(max_weyl) + "; the harmonic-Weyl assertion is unverified");
  return rep;
}

}  // namespace

CertificateReport certify_field(const CurvatureField& field, const std::string& theorem,
                                const CertifyOptions& opts) {
  if (field.samples.empty()) throw EmptyFieldError("certify_field: empty field");
  if (theorem == "thm15") return certify_thm15(field, opts);
  if (theorem == "thm16") return certify_thm16(field, opts);
  if (theorem == "cor17") return certify_cor17(field, opts);
  if (theorem == "gb4") return certify_gb4(field, opts);
  if (theorem == "prop43_yamabe_lb") return certify_prop43(field, opts);
  if (theorem == "thm19_gap1") return certify_thm19(field, true, opts);
  if (theorem == "thm19_gap2") return certify_thm19(field, false, opts);
  throw UsageError("certify_field: unknown theorem '" + theorem + "'");
}

}  // namespace curvop
