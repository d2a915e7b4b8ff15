#include "curvop/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "curvop/errors.hpp"

namespace curvop {

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int require_dimension(const Json& j, const char* where) {
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ValidationError(std::string(where) + ": missing integer 'dimension'");
  return j["dimension"].get<int>();
}

CurvatureTensor tensor_from_riemann(int dim, const Json& entries, const LoadOptions& opts) {
  if (!entries.is_array()) throw ValidationError("'riemann' must be an array");
  CurvatureTensor rm(dim);
  std::vector<bool> seen(static_cast<std::size_t>(dim) * dim * dim * dim, false);
  int row = 0;
  for (const Json& e : entries) {
    const std::string tag = "riemann[" + std::to_string(row) + "]";
    if (!e.is_array() || e.size() != 5)
      throw ValidationError(tag + ": expected [i, j, k, l, value]");
    for (int c = 0; c < 4; ++c)
      if (!e[c].is_number_integer()) throw ValidationError(tag + ": indices must be integers");
    const int i = e[0].get<int>(), j = e[1].get<int>(), k = e[2].get<int>(), l = e[3].get<int>();
    if (!e[4].is_number()) throw ValidationError(tag + ": value must be a number");
    const double v = e[4].get<double>();
    for (int idx : {i, j, k, l})
      if (idx < 0 || idx >= dim)
        throw ValidationError(tag + ": index " + std::to_string(idx) +
                              " out of range for dimension " + std::to_string(dim));
    if (i >= j || k >= l || std::make_pair(i, j) > std::make_pair(k, l))
      throw ValidationError(tag + ": not a representative (need i<j, k<l, (i,j) <= (k,l))");
    const std::size_t flat = ((static_cast<std::size_t>(i) * dim + j) * dim + k) * dim + l;
    if (seen[flat]) throw ValidationError(tag + ": duplicate representative");
    seen[flat] = true;
    rm.set_orbit(i, j, k, l, v);
    ++row;
  }
  if (opts.bianchi_check) {
    try {
      rm.validate(opts.tol, true);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("loaded tensor invalid: ") + e.what());
    }
  }
  return rm;
}

}  // namespace

ModelSpec model_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ValidationError("model: missing string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  ModelSpec spec;
  if (kind == "space_form") {
    spec.kind = ModelSpec::Kind::space_form;
    spec.dim = require_dimension(j, "model(space_form)");
    spec.curvature = j.value("curvature", 1.0);
  } else if (kind == "product") {
    spec.kind = ModelSpec::Kind::product;
    if (!j.contains("factors") || !j["factors"].is_array())
      throw ValidationError("model(product): missing 'factors' array");
    for (const Json& f : j["factors"]) {
      if (!f.is_array() || f.size() != 2)
        throw ValidationError("model(product): each factor is [dim, curvature]");
      spec.factors.push_back(ModelFactor{f[0].get<int>(), f[1].get<double>()});
      spec.dim += f[0].get<int>();
    }
  } else if (kind == "random") {
    spec.kind = ModelSpec::Kind::random;
    spec.dim = require_dimension(j, "model(random)");
    spec.seed = j.value("seed", 0ULL);
    spec.weyl_scale = j.value("weyl_scale", 0.0);
    spec.ricci_scale = j.value("ricci_scale", 0.0);
    spec.scalar = j.value("scalar", 0.0);
  } else if (kind == "raw") {
    spec.kind = ModelSpec::Kind::raw;
    spec.dim = require_dimension(j, "model(raw)");
    if (!j.contains("riemann") || !j["riemann"].is_array())
      throw ValidationError("model(raw): missing 'riemann' array");
    for (const Json& e : j["riemann"]) {
      if (!e.is_array() || e.size() != 5)
        throw ValidationError("model(raw): riemann entries are [i,j,k,l,value]");
      spec.raw.push_back({e[0].get<double>(), e[1].get<double>(), e[2].get<double>(),
                          e[3].get<double>(), e[4].get<double>()});
    }
  } else {
    throw ValidationError("model: unknown kind '" + kind + "'");
  }
  return spec;
}

CurvatureTensor tensor_from_json(const Json& j, const LoadOptions& opts) {
  if (!j.is_object()) throw ValidationError("tensor file: top level must be an object");
  if (j.contains("model")) {
    const ModelSpec spec = model_from_json(j["model"]);
    if (j.contains("dimension") && j["dimension"].get<int>() != spec.dim)
      throw ValidationError("tensor file: 'dimension' disagrees with the model");
    return from_model(spec);
  }
  const int dim = require_dimension(j, "tensor file");
  if (dim < 3) throw ValidationError("tensor file: dimension must be >= 3");
  if (!j.contains("riemann"))
    throw ValidationError("tensor file: need 'riemann' entries or a 'model'");
  return tensor_from_riemann(dim, j["riemann"], opts);
}

CurvatureTensor load_tensor_file(const std::string& path, const LoadOptions& opts) {
  return tensor_from_json(parse_file(path), opts);
}

CurvatureField field_from_json(const Json& j, const LoadOptions& opts) {
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array())
    throw ValidationError("field file: missing 'samples' array");
  const int dim = require_dimension(j, "field file");
  std::vector<CurvatureField::Sample> samples;
  int idx = 0;
  for (const Json& s : j["samples"]) {
    const std::string tag = "samples[" + std::to_string(idx) + "]";
    if (!s.is_object() || !s.contains("weight"))
      throw ValidationError(tag + ": need an object with 'weight'");
    const double w = s["weight"].get<double>();
    if (!(w > 0.0)) throw ValidationError(tag + ": weight must be > 0");
    CurvatureTensor rm(3);
    if (s.contains("model")) {
      rm = from_model(model_from_json(s["model"]));
    } else if (s.contains("riemann")) {
      rm = tensor_from_riemann(dim, s["riemann"], opts);
    } else {
      throw ValidationError(tag + ": need 'riemann' or 'model'");
    }
    if (rm.dim() != dim)
      throw ValidationError(tag + ": sample dimension " + std::to_string(rm.dim()) +
                            " does not match field dimension " + std::to_string(dim));
    samples.push_back(CurvatureField::Sample{w, std::move(rm)});
    ++idx;
  }
  if (samples.empty()) throw ValidationError("field file: no samples");
  return CurvatureField::from_samples(std::move(samples));
}

CurvatureField load_field_file(const std::string& path, const LoadOptions& opts) {
  return field_from_json(parse_file(path), opts);
}

Json tensor_to_json(const CurvatureTensor& rm) {
  const int n = rm.dim();
  Json entries = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = i; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (k == i && l < j) continue;
          const double v = rm(i, j, k, l);
          if (v != 0.0) entries.push_back(Json::array({i, j, k, l, v}));
        }
  Json out;
  out["dimension"] = n;
  out["riemann"] = std::move(entries);
  return out;
}

Json report_to_json(const CertificateReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  Json inputs;
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = std::move(inputs);
  Json hv;
  for (const auto& [k, v] : r.hypothesis_values) hv[k] = v;
  j["hypothesis_values"] = std::move(hv);
  j["threshold"] = r.threshold;
  j["margin"] = r.margin;
  j["verdict"] = to_string(r.verdict);
  j["conclusion_text"] = r.conclusion_text;
  j["notes"] = r.notes;
  return j;
}

namespace {

void write_stable(const Json& j, std::ostream& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << pad_in << Json(it.key()).dump() << ": ";
        write_stable(it.value(), out, indent, depth + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out << ",\n";
        first = false;
        out << pad_in;
        write_stable(e, out, indent, depth + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
      } else {
        out << (std::isnan(v) ? "null" : (v > 0 ? "1e999" : "-1e999"));
      }
      return;
    }
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

void write_json_stable(const Json& j, std::ostream& out, int indent) {
  write_stable(j, out, indent, 0);
  out << "\n";
}

std::string json_stable_string(const Json& j, int indent) {
  std::ostringstream os;
  write_json_stable(j, os, indent);
  return os.str();
}

}  // namespace curvop
