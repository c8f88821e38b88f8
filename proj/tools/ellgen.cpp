#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ellgen/cusp.hpp"
#include "ellgen/genus.hpp"
#include "ellgen/localizer.hpp"
#include "ellgen/obstruction.hpp"
#include "ellgen/verify.hpp"

using namespace ellgen;

namespace {

struct RunConfig {
  std::string manifold;
  std::string action;
  std::string spec = "generic";
  std::string cusp = "ahat";
  std::string suite = "all";
  std::string lambda = "2,3,5";
  std::string weights;
  std::string matrix;
  std::string rfpd;
  int order = 0;
  int p = 0;
  int r = 0;
  int k = 0;
  int qorder = kDefaultQOrder;
  std::string format = "json";
  std::string output;
};

int default_qorder() {
  const char* env = std::getenv("ELLGEN_QORDER");
  if (env == nullptr || *env == '\0') return kDefaultQOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) fail(ErrorCode::kDomain, std::string("ELLGEN_QORDER must be an integer in 0..64, got '") + env + "'");
  return static_cast<int>(v);
}

// Inline JSON text or a path to a JSON file.
Json json_arg(const std::string& text, const std::string& where) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) return parse_json_text(text, where);
  return read_json_file(text);
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, v] : j.items()) flatten(v, path.empty() ? key : path + "." + key, rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(j));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  const bool checks = report.is_array() && !report.empty() && report.front().contains("status");
  if (checks) {
    if (format == "csv") out << "name,status\n";
    for (const Json& c : report) {
      if (format == "csv") {
        out << csv_field(c["name"].get<std::string>()) << "," << c["status"].get<std::string>() << "\n";
      } else {
        out << c["status"].get<std::string>() << " " << c["name"].get<std::string>() << "\n";
      }
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  if (format == "csv") out << "key,value\n";
  for (const auto& [k, v] : rows) {
    if (format == "csv") {
      out << csv_field(k) << "," << csv_field(v) << "\n";
    } else {
      out << k << ": " << v << "\n";
    }
  }
  return out.str();
}

void emit(const Json& report, const RunConfig& cfg) {
  const std::string text = render(report, cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) fail(ErrorCode::kDomain, "cannot write " + cfg.output);
  f << text;
}

void require_qorder(int q, int min) {
  if (q < min) fail(ErrorCode::kDomain, "--qorder must be >= " + std::to_string(min));
}

int cmd_genus(const RunConfig& cfg) {
  const ManifoldModel m = resolve_model_ref(cfg.manifold);
  Json out;
  out["manifold"] = m.name;
  out["spec"] = cfg.spec;
  if (cfg.spec == "generic") {
    const auto v = genus_value(generic_spec(), m);
    out["value"] = to_json(v.value);
    if (!v.notice.empty()) out["notice"] = v.notice;
  } else {
    const auto v = genus_value(rational_spec(cfg.spec), m);
    out["value"] = to_json(v.value);
    if (!v.notice.empty()) out["notice"] = v.notice;
    // The signature also sits at q^0 of the signature-cusp series.
    if (cfg.spec == "signature" && m.dim_real % 4 == 0) {
      const Rational loop = loop_sign_series(m, 1).series.coeff(0);
      if (loop != v.value) fail(ErrorCode::kInternalInconsistency, m.name + ": signature disagrees with the loop-space series");
      out["cross_check"] = "PASS";
    }
  }
  emit(out, cfg);
  return 0;
}

int cmd_expand(const RunConfig& cfg) {
  require_qorder(cfg.qorder, 0);
  const ManifoldModel m = resolve_model_ref(cfg.manifold);
  const Cusp cusp = cusp_from_name(cfg.cusp);
  const IndexSeries s = cusp_series(m, cusp, cfg.qorder);
  Json out;
  out["manifold"] = m.name;
  out["cusp"] = cusp_name(cusp);
  out["qorder"] = cfg.qorder;
  out["k"] = s.k;
  out["series"] = series_to_json(s.series);
  const PoleOrder po = pole_order(s);
  out["pole_order"] = po.determinate ? to_json(po.order) : Json("indeterminate");
  if (cusp == Cusp::kAhat) {
    const auto first = first_nonzero_phi0_index(m, cfg.qorder);
    out["first_nonzero_index"] = first ? Json(*first) : Json("indeterminate");
    Json coeffs = Json::array();
    for (int j = 0; -s.k + 2 * j <= s.series.order() && j <= cfg.qorder; ++j) coeffs.push_back(to_json(s.series.coeff(-s.k + 2 * j)));
    out["coefficients"] = coeffs;
  }
  emit(out, cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const auto checks = run_suite(cfg.suite, cfg.qorder);
  emit(suite_to_json(checks), cfg);
  for (const auto& c : checks) {
    if (!c.pass) return exit_code_for(ErrorCode::kInternalInconsistency);
  }
  return 0;
}

std::vector<GaussianRational> parse_samples(const std::string& text) {
  std::vector<GaussianRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_sample(item));
  if (out.empty()) fail(ErrorCode::kDomain, "--lambda needs at least one sample");
  return out;
}

int cmd_rigidity(const RunConfig& cfg) {
  require_qorder(cfg.qorder, 1);
  const CircleActionData a = resolve_action_ref(cfg.action);
  const auto samples = parse_samples(cfg.lambda);
  for (const auto& l : samples) {
    if (!admissible(a, l)) fail(ErrorCode::kAdmissibility, "sample " + l.to_string() + " is not admissible for " + a.name);
  }
  const RigidityReport r = rigidity_check(a, samples, cfg.qorder);
  Json out;
  out["action"] = a.name;
  out["ambient"] = a.ambient.name;
  out["parity"] = parity_name(action_parity(a));
  out["qorder"] = cfg.qorder;
  Json values = Json::array();
  for (std::size_t i = 0; i < samples.size(); ++i) values.push_back({{"lambda", to_json(samples[i])}, {"series", series_to_json(r.values[i])}});
  out["values"] = values;
  out["nonequivariant"] = series_to_json(r.nonequivariant);
  out["spin"] = r.spin;
  out["constant"] = r.constant;
  out["matches_direct"] = r.matches_direct;
  out["q0_constant"] = r.q0_constant;
  out["status"] = r.status;
  emit(out, cfg);
  return r.status == "FAIL" ? exit_code_for(ErrorCode::kInternalInconsistency) : 0;
}

int cmd_obstruct(const RunConfig& cfg) {
  Json out;
  int code = 0;
  if (!cfg.weights.empty()) {
    if (cfg.order < 2) fail(ErrorCode::kDomain, "--order must be >= 2");
    const Json w = parse_json_text(cfg.weights, "--weights");
    if (!w.is_array()) fail(ErrorCode::kSchema, "--weights must be a JSON array of integers");
    std::vector<int> ws;
    Json reduced = Json::array();
    for (const Json& x : w) {
      if (!x.is_number_integer()) fail(ErrorCode::kSchema, "--weights must be a JSON array of integers");
      ws.push_back(x.get<int>());
      reduced.push_back(reduced_weight(ws.back(), cfg.order));
    }
    const Rational m = m_o(ws, cfg.order);
    const int c = codim(ws, cfg.order);
    out["weights"] = ws;
    out["order"] = cfg.order;
    out["reduced"] = reduced;
    out["m_o"] = to_json(m);
    out["codim"] = c;
    Json vanish;
    vanish["cyclic_m_o"] = vanish_prediction(VanishSource::kCyclicMo, m, cfg.order);
    vanish["cyclic_codim"] = vanish_prediction(VanishSource::kCyclicCodim, Rational(c), cfg.order);
    if (cfg.order == 2) vanish["involution_codim"] = vanish_prediction(VanishSource::kInvolutionCodim, Rational(c));
    out["vanish"] = vanish;
  }
  if (!cfg.action.empty()) {
    if (cfg.order < 2) fail(ErrorCode::kDomain, "--order must be >= 2");
    require_qorder(cfg.qorder, 1);
    const CircleActionData a = resolve_action_ref(cfg.action);
    const CrossCheck c = cross_check_prediction(a, cfg.order, cfg.qorder);
    Json j;
    j["action"] = a.name;
    j["m_o"] = to_json(c.m_o);
    j["codim"] = c.codim;
    j["predicted"] = c.predicted;
    j["first_nonzero_index"] = c.first_nonzero ? Json(*c.first_nonzero) : Json(nullptr);
    j["status"] = c.status;
    out["cross_check"] = j;
    if (c.status == "FAIL") code = exit_code_for(ErrorCode::kInternalInconsistency);
  }
  if (!cfg.matrix.empty()) {
    const IntMatrix a = matrix_from_json(json_arg(cfg.matrix, "--matrix"));
    if (cfg.p > 0) {
      const LatticeNormalForm nf = lattice_normal_form(a, cfg.p);
      out["normal_form"] = {{"p", cfg.p},
                            {"matrix", matrix_to_json(nf.matrix)},
                            {"transform", matrix_to_json(nf.transform)},
                            {"column_order", nf.column_order},
                            {"covering_degree", nf.covering_degree}};
    }
    if (cfg.r > 0 || cfg.k > 0) out["code_audit"] = code_audit_to_json(code_audit(a, cfg.r, cfg.k));
    if (cfg.p <= 0 && cfg.r <= 0 && cfg.k <= 0) fail(ErrorCode::kDomain, "--matrix needs --p or --r/--k");
  }
  if (!cfg.rfpd.empty()) {
    const Json t = json_arg(cfg.rfpd, "--rfpd");
    std::vector<FixedDimensionRow> table;
    try {
      for (const Json& row : t) table.push_back({row.at("x_dim").get<int>(), row.at("components").get<std::vector<int>>()});
    } catch (const nlohmann::json::exception&) {
      fail(ErrorCode::kSchema, "--rfpd rows need x_dim and components");
    }
    out["rfpd"] = rfpd_check(table);
  }
  if (out.is_null()) fail(ErrorCode::kDomain, "obstruct needs --weights, --action, --matrix or --rfpd");
  emit(out, cfg);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic genera, cusp expansions, localization and obstruction audits"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.qorder = default_qorder();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--qorder", cfg.qorder, "truncation order in q (default $ELLGEN_QORDER or 6)");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
  };

  auto* genus = app.add_subcommand("genus", "genus value of a manifold");
  genus->add_option("--manifold", cfg.manifold, "builtin:NAME or a model file")->required();
  genus->add_option("--spec", cfg.spec, "generic, signature, ahat");
  common(genus);

  auto* expand = app.add_subcommand("expand", "cusp expansion, pole order and vanishing");
  expand->add_option("--manifold", cfg.manifold, "builtin:NAME or a model file")->required();
  expand->add_option("--cusp", cfg.cusp, "signature or ahat");
  common(expand);

  auto* verify = app.add_subcommand("verify", "run named verification checks");
  verify->add_option("--suite", cfg.suite, "all, genus, cusp, localizer, obstruction, io");
  common(verify);

  auto* rigidity = app.add_subcommand("rigidity", "equivariant series across sample points");
  rigidity->add_option("--action", cfg.action, "builtin:NAME or an action file")->required();
  rigidity->add_option("--lambda", cfg.lambda, "comma separated samples, e.g. 2,3,5 or 1+i");
  common(rigidity);

  auto* obstruct = app.add_subcommand("obstruct", "m_o, vanish predictions, normal forms, code audits");
  obstruct->add_option("--weights", cfg.weights, "JSON array of rotation weights");
  obstruct->add_option("--order", cfg.order, "order o of the cyclic subgroup");
  obstruct->add_option("--action", cfg.action, "cross-check an action against Phi_0");
  obstruct->add_option("--matrix", cfg.matrix, "weight matrix, inline JSON or file");
  obstruct->add_option("--p", cfg.p, "prime for the lattice normal form");
  obstruct->add_option("--r", cfg.r, "code audit: matrix is 2r x 2k");
  obstruct->add_option("--k", cfg.k, "code audit: matrix is 2r x 2k");
  obstruct->add_option("--rfpd", cfg.rfpd, "restricted fixed point dimension table");
  common(obstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cfg.action.rfind("builtin:", 0) != 0 && !cfg.action.empty() && cfg.action.find('(') != std::string::npos &&
        cfg.action.find('/') == std::string::npos) {
      cfg.action = "builtin:" + cfg.action;
    }
    if (*genus) return cmd_genus(cfg);
    if (*expand) return cmd_expand(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*rigidity) return cmd_rigidity(cfg);
    if (*obstruct) return cmd_obstruct(cfg);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}
