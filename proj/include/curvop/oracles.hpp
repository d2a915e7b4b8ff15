#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvop {

// Outcome of one property-test driver run.
struct OracleResult {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_slack = 0.0;  // most negative slack seen (0 if none negative)
  std::vector<std::string> details;
  bool passed() const { return failures == 0; }
};

// Zero-sum lowest-k bound on random centered sequences (N <= 66), plus the
// two equality families and scaled near-equality rejections.
OracleResult oracle_lemma32(int trials, std::uint64_t seed);

// Sub/superadditivity of eigenvalue sums on random symmetric pairs (N <= 12).
OracleResult oracle_lemma31(int trials, std::uint64_t seed);

// Random orthonormal tuples against the top-k eigenvalue sum, plus the
// eigenvector-tuple equality case.
OracleResult oracle_kyfan(int trials, std::uint64_t seed);

// Eigenvalue concentration around the trace mean.
OracleResult oracle_concentration(int trials, std::uint64_t seed);

// Exhaustive integer check of the elementary inequality for n in [8, 64].
OracleResult oracle_lemma44();

// Multi-start minimizer vs dense direction scan at n in {3, 4}; `trials`
// counts tensors.
OracleResult oracle_rick_grid(int trials, std::uint64_t seed);

}  // namespace curvop
