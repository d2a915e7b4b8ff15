#include "curvop/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "curvop/bivector.hpp"
#include "curvop/bounds.hpp"
#include "curvop/certify.hpp"
#include "curvop/decompose.hpp"
#include "curvop/errors.hpp"
#include "curvop/io.hpp"
#include "curvop/model_zoo.hpp"
#include "curvop/oracles.hpp"
#include "curvop/ricci_k.hpp"

namespace curvop {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t env_seed() {
  if (const char* s = std::getenv("CURVOP_SEED")) return std::strtoull(s, nullptr, 10);
  return 0;
}

void dump_matrix(std::ostream& out, const BivectorMatrix& m, const std::string& name) {
  const BivectorIndex& idx = m.index();
  out << name << " pairs:";
  for (int a = 0; a < idx.count(); ++a) {
    const auto [i, j] = idx.pair(a);
    out << " (" << i << "," << j << ")";
  }
  out << "\n";
  for (int i = 0; i < idx.count(); ++i) {
    for (int j = 0; j < idx.count(); ++j) out << (j ? " " : "") << num(m.entries()(i, j));
    out << "\n";
  }
}

Json matrix_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(std::ostream& out, const Json& j) { write_json_stable(j, out); }

int cmd_decompose(const std::string& path, bool json, const LoadOptions& load,
                  std::ostream& out) {
  const CurvatureTensor rm = load_tensor_file(path, load);
  const int n = rm.dim();
  const DecomposedCurvature dec = orthogonal_decompose(rm);
  const std::vector<double> ric_eigs = jacobi_eigenvalues(dec.ricci.matrix());

  // Residuals of the two reconstructions and of the norm identity.
  const SymTwoTensor g = SymTwoTensor::metric(n);
  CurvatureTensor recon = kulkarni_nomizu(dec.schouten, g);
  recon.add_scaled(dec.weyl, 1.0);
  recon.add_scaled(rm, -1.0);
  const double recon_schouten = std::sqrt(recon.full_norm_sq());

  CurvatureTensor recon2 = kulkarni_nomizu(g, g).scaled(dec.scalar / (2.0 * n * (n - 1)));
  recon2.add_scaled(kulkarni_nomizu(dec.traceless_ricci, g), 1.0 / (n - 2));
  recon2.add_scaled(dec.weyl, 1.0);
  recon2.add_scaled(rm, -1.0);
  const double recon_orth = std::sqrt(recon2.full_norm_sq());

  const double z_sq = concircular_norm_sq(dec);
  const double weyl_sq = dec.weyl.full_norm_sq();
  const double ric0_sq = dec.traceless_ricci.full_norm_sq();
  const double identity_residual =
      std::fabs(z_sq - (4.0 / (n - 2) * ric0_sq + weyl_sq));

  if (json) {
    Json j;
    j["command"] = "decompose";
    j["dimension"] = n;
    j["scalar_curvature"] = dec.scalar;
    j["ricci_eigenvalues"] = ric_eigs;
    j["traceless_ricci_norm"] = std::sqrt(ric0_sq);
    j["weyl_norm"] = std::sqrt(weyl_sq);
    j["weyl_norm_sq"] = weyl_sq;
    j["concircular_norm"] = std::sqrt(z_sq);
    j["pinching_quantity"] = pinching_quantity(dec);
    Json res;
    res["schouten_reconstruction"] = recon_schouten;
    res["orthogonal_reconstruction"] = recon_orth;
    res["weyl_trace"] = weyl_trace_residual(dec.weyl);
    res["concircular_identity"] = identity_residual;
    j["residuals"] = std::move(res);
    emit(out, j);
  } else {
    out << "dimension: " << n << "\n";
    out << "scalar curvature R: " << num(dec.scalar) << "\n";
    out << "Ricci eigenvalues:";
    for (double l : ric_eigs) out << " " << num(l);
    out << "\n";
    out << "|Ric0|: " << num(std::sqrt(ric0_sq)) << "\n";
    out << "|W|: " << num(std::sqrt(weyl_sq)) << "  |W|^2: " << num(weyl_sq) << "\n";
    out << "|Z|: " << num(std::sqrt(z_sq)) << "\n";
    out << "pinching quantity: " << num(pinching_quantity(dec)) << "\n";
    out << "residuals: schouten_reconstruction=" << num(recon_schouten)
        << " orthogonal_reconstruction=" << num(recon_orth)
        << " weyl_trace=" << num(weyl_trace_residual(dec.weyl))
        << " concircular_identity=" << num(identity_residual) << "\n";
  }
  return 0;
}

int cmd_spectrum(const std::string& path, const std::string& frame_kind, bool json,
                 const LoadOptions& load, std::ostream& out) {
  if (frame_kind != "standard" && frame_kind != "ricci")
    throw UsageError("spectrum: --frame must be 'standard' or 'ricci'");
  const CurvatureTensor rm = load_tensor_file(path, load);

  const Theorem12Blocks blocks = theorem12_blocks(rm);
  const Frame& frame =
      (frame_kind == "ricci") ? blocks.frame : Frame::standard(rm.dim());
  const BivectorMatrix op = curvature_operator(rm, frame);
  const SpectralSummary spec = spectrum(op);

  if (json) {
    Json j;
    j["command"] = "spectrum";
    j["dimension"] = rm.dim();
    j["frame"] = frame_kind;
    Json pairs = Json::array();
    for (int a = 0; a < op.index().count(); ++a) {
      const auto [i, jj] = op.index().pair(a);
      pairs.push_back(Json::array({i, jj}));
    }
    j["pairs"] = std::move(pairs);
    j["eigenvalues"] = spec.eigenvalues;
    j["prefix_sums"] = spec.prefix_sums;
    j["operator_matrix"] = matrix_json(op.entries());
    Json b;
    b["ricci_eigenvalues"] = blocks.ricci_eigenvalues;
    Json lam = Json::array();
    for (int a = 0; a < blocks.schouten_block.index().count(); ++a)
      lam.push_back(blocks.schouten_block.entries()(a, a));
    b["lambda_ij"] = std::move(lam);
    b["weyl_block"] = matrix_json(blocks.weyl_block.entries());
    b["weyl_block_trace"] = blocks.weyl_block.trace();
    j["theorem12_blocks"] = std::move(b);
    emit(out, j);
  } else {
    out << "dimension: " << rm.dim() << "  frame: " << frame_kind << "\n";
    out << "eigenvalues:";
    for (double v : spec.eigenvalues) out << " " << num(v);
    out << "\nprefix sums:";
    for (double v : spec.prefix_sums) out << " " << num(v);
    out << "\n";
    dump_matrix(out, op, "operator");
    out << "block decomposition in the Ricci eigenframe:\n";
    out << "lambda_ij:";
    for (int a = 0; a < blocks.schouten_block.index().count(); ++a)
      out << " " << num(blocks.schouten_block.entries()(a, a));
    out << "\n";
    dump_matrix(out, blocks.weyl_block, "weyl block");
  }
  return 0;
}

int cmd_seck(const std::string& path, int k, int restarts, std::uint64_t seed, bool json,
             const LoadOptions& load, std::ostream& out) {
  const CurvatureTensor rm = load_tensor_file(path, load);
  const RicKResult r = ric_k_min(rm, k, restarts, seed);
  if (json) {
    Json j;
    j["command"] = "seck";
    j["dimension"] = rm.dim();
    j["k"] = r.k;
    j["value"] = r.value;
    j["argmin_direction"] = r.argmin_direction;
    j["restarts_used"] = r.restarts_used;
    j["converged"] = r.converged;
    emit(out, j);
  } else {
    out << "Ric_" << k << " minimum: " << num(r.value) << "\n";
    out << "argmin direction:";
    for (double c : r.argmin_direction) out << " " << num(c);
    out << "\n";
    out << "restarts: " << r.restarts_used << "  converged: " << (r.converged ? "yes" : "no")
        << "\n";
  }
  return 0;
}

int cmd_certify(const std::string& path, const std::string& theorem, const CertifyOptions& opts,
                bool json, const LoadOptions& load, std::ostream& out) {
  const Json doc = [&] {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
      return Json::parse(in);
    } catch (const std::exception& e) {
      throw ValidationError("'" + path + "' is not valid JSON: " + std::string(e.what()));
    }
  }();

  const auto& pointwise = pointwise_theorems();
  const auto& fieldwise = field_theorems();
  const bool is_pointwise =
      std::find(pointwise.begin(), pointwise.end(), theorem) != pointwise.end();
  const bool is_field =
      std::find(fieldwise.begin(), fieldwise.end(), theorem) != fieldwise.end();
  if (!is_pointwise && !is_field)
    throw UsageError("certify: unknown theorem '" + theorem + "'");

  CertificateReport rep;
  if (is_pointwise) {
    if (doc.contains("samples"))
      throw UsageError("certify: theorem '" + theorem + "' is pointwise; got a field file");
    rep = certify_pointwise(tensor_from_json(doc, load), theorem, opts);
  } else {
    if (doc.contains("samples")) {
      rep = certify_field(field_from_json(doc, load), theorem, opts);
    } else {
      // A plain tensor file acts as a single-sample field of weight 1.
      std::vector<CurvatureField::Sample> one;
      one.push_back(CurvatureField::Sample{1.0, tensor_from_json(doc, load)});
      rep = certify_field(CurvatureField::from_samples(std::move(one)), theorem, opts);
    }
  }

  if (json) {
    emit(out, report_to_json(rep));
  } else {
    out << "theorem: " << rep.theorem_id << "\n";
    out << "verdict: " << to_string(rep.verdict) << "\n";
    out << "threshold: " << num(rep.threshold) << "  margin: " << num(rep.margin) << "\n";
    for (const auto& [k, v] : rep.hypothesis_values)
      out << "  " << k << " = " << num(v) << "\n";
    out << "conclusion: " << rep.conclusion_text << "\n";
    for (const auto& note : rep.notes) out << "note: " << note << "\n";
  }
  return 0;
}

int cmd_zoo(const std::string& kind, int dim, double curvature, const std::string& factors,
            std::uint64_t seed, double weyl_scale, double ricci_scale, double scalar,
            const std::string& out_path, std::ostream& out) {
  ModelSpec spec;
  if (kind == "space_form") {
    spec.kind = ModelSpec::Kind::space_form;
    spec.dim = dim;
    spec.curvature = curvature;
  } else if (kind == "product") {
    spec.kind = ModelSpec::Kind::product;
    std::istringstream is(factors);
    std::string part;
    while (std::getline(is, part, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos)
        throw UsageError("zoo: --factors wants dim:curvature pairs, e.g. 2:1,2:1");
      spec.factors.push_back(
          ModelFactor{std::stoi(part.substr(0, colon)), std::stod(part.substr(colon + 1))});
    }
    if (spec.factors.empty()) throw UsageError("zoo: product needs --factors");
  } else if (kind == "random") {
    spec.kind = ModelSpec::Kind::random;
    spec.dim = dim;
    spec.seed = seed;
    spec.weyl_scale = weyl_scale;
    spec.ricci_scale = ricci_scale;
    spec.scalar = scalar;
  } else {
    throw UsageError("zoo: --kind must be space_form, product, or random");
  }

  const Json j = tensor_to_json(from_model(spec));
  if (out_path.empty()) {
    emit(out, j);
  } else {
    std::ofstream f(out_path);
    if (!f) throw ValidationError("cannot write '" + out_path + "'");
    write_json_stable(j, f);
  }
  return 0;
}

int cmd_oracle(const std::string& suite, int trials, std::uint64_t seed, bool json,
               std::ostream& out) {
  OracleResult r;
  if (suite == "lemma32")
    r = oracle_lemma32(trials > 0 ? trials : 100000, seed);
  else if (suite == "lemma31")
    r = oracle_lemma31(trials > 0 ? trials : 10000, seed);
  else if (suite == "kyfan")
    r = oracle_kyfan(trials > 0 ? trials : 1000, seed);
  else if (suite == "concentration")
    r = oracle_concentration(trials > 0 ? trials : 10000, seed);
  else if (suite == "lemma44")
    r = oracle_lemma44();
  else if (suite == "rick-grid")
    r = oracle_rick_grid(trials > 0 ? trials : 4, seed);
  else
    throw UsageError("oracle: unknown suite '" + suite + "'");

  if (json) {
    Json j;
    j["command"] = "oracle";
    j["suite"] = r.suite;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["worst_slack"] = r.worst_slack;
    j["passed"] = r.passed();
    j["details"] = r.details;
    emit(out, j);
  } else {
    out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.trials
        << " trials, worst slack " << num(r.worst_slack) << ")\n";
    for (const auto& d : r.details) out << "  " << d << "\n";
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"curvature operator decompositions, spectra, and certificates"};
  app.require_subcommand(1);

  std::string path, out_path;
  bool json = false, no_bianchi = false;
  double tol = 1e-9;
  std::uint64_t seed = env_seed();
  int restarts = 64, k = 1, threads = 0, trials = 0;
  std::string frame_kind = "standard", theorem, suite;
  std::string kind = "space_form", factors;
  int dim = 4;
  double curvature = 1.0, weyl_scale = 0.0, ricci_scale = 0.0, scalar = 0.0;
  double a_flag = 0.0, yamabe_flag = 0.0;
  bool harmonic = false;

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", path, "input JSON file")->required();
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--tol", tol, "validation tolerance");
    sub->add_flag("--no-bianchi-check", no_bianchi, "skip the first-Bianchi validation");
  };

  CLI::App* dec = app.add_subcommand("decompose", "curvature decomposition and norms");
  add_common(dec, true);

  CLI::App* spec = app.add_subcommand("spectrum", "operator spectrum and block dump");
  add_common(spec, true);
  spec->add_option("--frame", frame_kind, "operator frame: standard | ricci");

  CLI::App* seck = app.add_subcommand("seck", "k-th intermediate Ricci minimum");
  add_common(seck, true);
  seck->add_option("--k", k, "which intermediate Ricci")->required();
  seck->add_option("--restarts", restarts, "multi-start count");
  seck->add_option("--seed", seed, "random seed (CURVOP_SEED fallback)");

  CLI::App* cert = app.add_subcommand("certify", "theorem hypothesis certificates");
  add_common(cert, true);
  cert->add_option("--theorem", theorem, "theorem id")->required();
  cert->add_option("--k", k, "intermediate Ricci index");
  CLI::Option* a_opt = cert->add_option("--a", a_flag, "curvature level a");
  CLI::Option* y_opt = cert->add_option("--yamabe", yamabe_flag, "Yamabe constant");
  cert->add_flag("--assert-harmonic-weyl", harmonic, "assert divergence-free Weyl");
  cert->add_option("--seed", seed, "random seed (CURVOP_SEED fallback)");
  cert->add_option("--restarts", restarts, "multi-start count");
  cert->add_option("--threads", threads, "sample parallelism (0 = auto)");

  CLI::App* zoo = app.add_subcommand("zoo", "generate model tensors");
  zoo->add_option("--kind", kind, "space_form | product | random");
  zoo->add_option("--dim", dim, "dimension");
  zoo->add_option("--curvature", curvature, "sectional curvature (space_form)");
  zoo->add_option("--factors", factors, "product factors dim:curvature,...");
  zoo->add_option("--seed", seed, "random seed");
  zoo->add_option("--weyl-scale", weyl_scale, "random model Weyl norm");
  zoo->add_option("--ricci-scale", ricci_scale, "random model trace-free Ricci norm");
  zoo->add_option("--scalar", scalar, "random model scalar curvature");
  zoo->add_option("-o,--output", out_path, "output file (stdout if omitted)");
  zoo->add_flag("--json", json, "ignored; output is always JSON");

  CLI::App* oracle = app.add_subcommand("oracle", "property-test drivers");
  oracle->add_option("suite", suite, "lemma32|lemma31|kyfan|concentration|lemma44|rick-grid")
      ->required();
  oracle->add_option("--trials", trials, "trial count (suite default if omitted)");
  oracle->add_option("--seed", seed, "random seed (CURVOP_SEED fallback)");
  oracle->add_flag("--json", json, "machine-readable output");

  std::vector<const char*> argv;
  argv.push_back("curvop");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    const LoadOptions load{tol, !no_bianchi};
    if (app.got_subcommand(dec)) return cmd_decompose(path, json, load, out);
    if (app.got_subcommand(spec)) return cmd_spectrum(path, frame_kind, json, load, out);
    if (app.got_subcommand(seck)) return cmd_seck(path, k, restarts, seed, json, load, out);
    if (app.got_subcommand(cert)) {
      CertifyOptions opts;
      if (a_opt->count() > 0) opts.a = a_flag;
      opts.k = k;
      if (y_opt->count() > 0) opts.yamabe = yamabe_flag;
      opts.harmonic_weyl = harmonic;
      opts.seed = seed;
      opts.restarts = restarts;
      opts.threads = threads;
      return cmd_certify(path, theorem, opts, json, load, out);
    }
    if (app.got_subcommand(zoo))
      return cmd_zoo(kind, dim, curvature, factors, seed, weyl_scale, ricci_scale, scalar,
                     out_path, out);
    if (app.got_subcommand(oracle)) return cmd_oracle(suite, trials, seed, json, out);
    throw UsageError("no subcommand");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 3;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const InternalConsistencyError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace curvop
