#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "curvop/certify.hpp"
#include "curvop/model_zoo.hpp"
#include "curvop/tensor.hpp"

namespace curvop {

using Json = nlohmann::ordered_json;

struct LoadOptions {
  double tol = 1e-9;
  bool bianchi_check = true;
};

// Tensor files: {"dimension": n, "riemann": [[i,j,k,l,value], ...]} with
// 0-based indices restricted to representatives i<j, k<l, (i,j) <= (k,l)
// lexicographically; symmetries are expanded on load. A {"model": {...}}
// object may replace the riemann list.
CurvatureTensor tensor_from_json(const Json& j, const LoadOptions& opts = {});
CurvatureTensor load_tensor_file(const std::string& path, const LoadOptions& opts = {});

// Field files: {"dimension": n, "samples": [{"weight": w, "riemann"|"model": ...}, ...]}.
CurvatureField field_from_json(const Json& j, const LoadOptions& opts = {});
CurvatureField load_field_file(const std::string& path, const LoadOptions& opts = {});

ModelSpec model_from_json(const Json& j);

// Representative entries of rm (nonzero only), in the frozen lexicographic
// order.
Json tensor_to_json(const CurvatureTensor& rm);

Json report_to_json(const CertificateReport& report);

// Deterministic serialization: insertion order preserved, every float printed
// with 17 significant digits.
void write_json_stable(const Json& j, std::ostream& out, int indent = 2);
std::string json_stable_string(const Json& j, int indent = 2);

}  // namespace curvop
