#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvop/tensor.hpp"

namespace curvop {

// Quadrature-weighted field of pointwise curvature tensors; weights play the
// role of volume elements and total_volume() of Vol(g).
struct CurvatureField {
  struct Sample {
    double weight;
    CurvatureTensor tensor;
  };

  int dim = 0;
  std::vector<Sample> samples;

  double total_volume() const;
  static CurvatureField from_samples(std::vector<Sample> samples);  // validates
};

enum class Verdict { hypotheses_met, not_met, degenerate };

std::string to_string(Verdict v);

// Per-theorem verdict: hypothesis values, the decisive threshold, the margin
// of the primary inequality, and the predicted topological conclusion.
struct CertificateReport {
  std::string theorem_id;
  std::map<std::string, double> inputs;
  std::map<std::string, double> hypothesis_values;
  double threshold = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::not_met;
  std::string conclusion_text;
  std::vector<std::string> notes;
};

struct CertifyOptions {
  std::optional<double> a;        // curvature level; computed when absent
  int k = 1;
  std::optional<double> yamabe;   // Yamabe constant (never solved for)
  bool harmonic_weyl = false;     // user assertion, recorded but unverifiable
  std::uint64_t seed = 0;
  int restarts = 64;
  int threads = 0;                // 0 = hardware concurrency
};

// Discrete quadrature (sum_s w_s q_s^p)^(1/p) of a per-sample quantity.
double lp_norm(const CurvatureField& field,
               const std::function<double(const CurvatureTensor&)>& quantity, double p);

// Pointwise theorems: thm14_pos, thm14_neg, cor34, cor25_lcf, thm27_lcf,
// thm210_lcf, cor28_quasipos, diam_betti_hyp, ht25_hyp.
CertificateReport certify_pointwise(const CurvatureTensor& rm, const std::string& theorem,
                                    const CertifyOptions& opts = {});

// Field theorems: thm15, thm16, cor17, gb4, prop43_yamabe_lb, thm19_gap1,
// thm19_gap2.
CertificateReport certify_field(const CurvatureField& field, const std::string& theorem,
                                const CertifyOptions& opts = {});

// n(n-1) a Vol^{2/n}: the Yamabe-constant lower bound from a Ricci lower
// bound Ric >= (n-1) a.
double prop43_lower_bound(int n, double a, double volume);

const std::vector<std::string>& pointwise_theorems();
const std::vector<std::string>& field_theorems();

// Runs fn(0..count-1) across threads; each index writes only its own slot,
// so results are schedule-independent.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace curvop
