#include "ellgen/localizer.hpp"

#include <cctype>
#include <map>
#include <regex>

namespace ellgen {

const char* parity_name(ActionParity p) {
  switch (p) {
    case ActionParity::kEven: return "even";
    case ActionParity::kOdd: return "odd";
    case ActionParity::kMixed: return "mixed";
  }
  return "mixed";
}

void CircleActionData::validate() const {
  ambient.validate();
  if (components.empty()) fail(ErrorCode::kSchema, name + ": an action needs at least one fixed component");
  for (const FixedComponent& c : components) {
    c.model.validate();
    if (c.model.dim_real + 2 * static_cast<int>(c.normal.size()) != ambient.dim_real) {
      fail(ErrorCode::kDimensionMismatch, name + ": component " + c.model.name + " of dimension " + std::to_string(c.model.dim_real) +
                                              " with " + std::to_string(c.normal.size()) + " normal lines does not fill dimension " +
                                              std::to_string(ambient.dim_real));
    }
    for (const NormalEntry& e : c.normal) {
      if (e.weight == 0) fail(ErrorCode::kSchema, name + ": normal weights must be nonzero");
      for (const auto& [sym, coeff] : e.chern) {
        const Generator* g = c.model.cohomology.find(sym);
        if (g == nullptr) fail(ErrorCode::kSchema, name + ": normal class uses unknown generator '" + sym + "'");
        if (g->degree != 2) fail(ErrorCode::kSchema, name + ": normal Chern class must have degree 2");
      }
    }
  }
}

std::vector<int> CircleActionData::weights() const {
  std::vector<int> out;
  for (const FixedComponent& c : components) {
    for (const NormalEntry& e : c.normal) out.push_back(e.weight);
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& where) {
  std::vector<int> out;
  std::string item;
  auto flush = [&] {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::kSchema, where + ": bad integer '" + item + "'");
    }
    item.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',') {
      flush();
    } else {
      item += ch;
    }
  }
  flush();
  return out;
}

CircleActionData cp_linear(int n, const std::vector<int>& m, const std::string& name) {
  if (static_cast<int>(m.size()) != n + 1) fail(ErrorCode::kSchema, name + ": expected " + std::to_string(n + 1) + " weights");
  CircleActionData a;
  a.name = name;
  a.ambient = builtin("CP" + std::to_string(n));
  a.provenance = "builtin linear action";
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i <= n; ++i) groups[m[static_cast<std::size_t>(i)]].push_back(i);
  for (const auto& [weight, members] : groups) {
    const int s = static_cast<int>(members.size());
    FixedComponent c;
    c.model = s == 1 ? builtin("pt") : builtin("CP" + std::to_string(s - 1));
    const LinearForm h = s == 1 ? LinearForm{} : LinearForm{{"h", Rational(1)}};
    for (int j = 0; j <= n; ++j) {
      if (m[static_cast<std::size_t>(j)] == weight) continue;
      c.normal.push_back({h, m[static_cast<std::size_t>(j)] - weight});
    }
    a.components.push_back(c);
  }
  return a;
}

CircleActionData hp_diagonal(int n, const std::vector<int>& w, const std::string& name) {
  if (static_cast<int>(w.size()) != n + 1) fail(ErrorCode::kSchema, name + ": expected " + std::to_string(n + 1) + " weights");
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(j)] || w[static_cast<std::size_t>(i)] == -w[static_cast<std::size_t>(j)]) {
        fail(ErrorCode::kDomain, name + ": weights must satisfy a_i != +-a_j; otherwise the fixed set is not isolated");
      }
    }
  }
  CircleActionData a;
  a.name = name;
  a.ambient = builtin("HP" + std::to_string(n));
  a.provenance = "builtin diagonal action";
  for (int i = 0; i <= n; ++i) {
    FixedComponent c;
    c.model = builtin("pt");
    const int ai = w[static_cast<std::size_t>(i)];
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      const int aj = w[static_cast<std::size_t>(j)];
      c.normal.push_back({{}, aj - ai});
      c.normal.push_back({{}, -(aj + ai)});
    }
    a.components.push_back(c);
  }
  return a;
}

LinearForm suffixed(const LinearForm& f, const std::string& suffix) {
  LinearForm out;
  for (const auto& [sym, c] : f) out.emplace(sym + suffix, c);
  return out;
}

CircleActionData action_product(const CircleActionData& a, const CircleActionData& b) {
  CircleActionData out;
  out.name = a.name + " x " + b.name;
  out.ambient = product({a.ambient, b.ambient});
  out.provenance = "product of actions";
  for (const FixedComponent& ca : a.components) {
    for (const FixedComponent& cb : b.components) {
      FixedComponent c;
      c.model = product({ca.model, cb.model});
      for (const NormalEntry& e : ca.normal) c.normal.push_back({suffixed(e.chern, "_1"), e.weight});
      for (const NormalEntry& e : cb.normal) c.normal.push_back({suffixed(e.chern, "_2"), e.weight});
      out.components.push_back(c);
    }
  }
  return out;
}

CircleActionData single_action(const std::string& raw) {
  std::string name;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) name += ch;
  }
  static const std::regex linear(R"(CP(\d+)_linear\((.*)\))");
  static const std::regex diagonal(R"(HP(\d+)_diagonal\((.*)\))");
  static const std::regex trivial(R"(trivial\((.*)\))");
  std::smatch m;
  if (std::regex_match(name, m, linear)) return cp_linear(std::stoi(m[1]), parse_int_list(m[2], name), name);
  if (std::regex_match(name, m, diagonal)) return hp_diagonal(std::stoi(m[1]), parse_int_list(m[2], name), name);
  if (std::regex_match(name, m, trivial)) {
    CircleActionData a;
    a.name = name;
    a.ambient = builtin(m[1]);
    a.provenance = "trivial action";
    a.components.push_back({a.ambient, {}});
    return a;
  }
  fail(ErrorCode::kUnknownName, "unknown action '" + raw + "'");
}

}  // namespace

CircleActionData builtin_action(const std::string& name) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char ch = name[i];
    depth += ch == '(' ? 1 : (ch == ')' ? -1 : 0);
    if (depth == 0 && name.compare(i, 3, " x ") == 0) {
      parts.push_back(current);
      current.clear();
      i += 2;
    } else {
      current += ch;
    }
  }
  parts.push_back(current);
  if (parts.size() > 3) fail(ErrorCode::kDomain, "action products are limited to three factors");
  CircleActionData a = single_action(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) a = action_product(a, single_action(parts[i]));
  a.validate();
  return a;
}

std::vector<std::string> builtin_action_catalog() {
  return {"CP2_linear(0,0,1)",   "CP2_linear(0,1,2)",   "CP3_linear(0,1,2,3)", "CP4_linear(0,1,2,3,4)",
          "HP1_diagonal(1,2)",   "HP2_diagonal(1,2,4)", "HP3_diagonal(1,2,3,5)", "trivial(HP2)",
          "trivial(V(4,4))",     "CP1_linear(0,1) x trivial(CP1)", "HP1_diagonal(1,2) x CP2_linear(0,0,1)"};
}

ActionParity action_parity(const CircleActionData& a) {
  bool saw_even = false, saw_odd = false;
  for (const FixedComponent& c : a.components) {
    int odd = 0;
    for (const NormalEntry& e : c.normal) odd += (e.weight % 2 != 0) ? 1 : 0;
    // codimension 2 * odd is 0 mod 4 iff odd is even
    (odd % 2 == 0 ? saw_even : saw_odd) = true;
  }
  if (saw_even && saw_odd) return ActionParity::kMixed;
  return saw_odd ? ActionParity::kOdd : ActionParity::kEven;
}

GaussianRational parse_sample(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) fail(ErrorCode::kSchema, "empty sample point");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/') {
      split = p;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  const std::string im = split == std::string::npos ? s : s.substr(split);
  Rational imag;
  if (im.empty() || im == "+") {
    imag = Rational(1);
  } else if (im == "-") {
    imag = Rational(-1);
  } else {
    imag = Rational::parse(im.front() == '+' ? im.substr(1) : im);
  }
  return {re.empty() ? Rational(0) : Rational::parse(re), imag};
}

bool admissible(const CircleActionData& a, const GaussianRational& lambda) {
  if (lambda.is_zero()) return false;
  for (int w : a.weights()) {
    if (lambda.pow(w) == GaussianRational(1)) return false;
  }
  return true;
}

QSeriesQi equivariant_series_at(const CircleActionData& a, const GaussianRational& lambda, int qorder) {
  if (!admissible(a, lambda)) fail(ErrorCode::kAdmissibility, a.name + ": sample " + lambda.to_string() + " is not admissible");
  if (lambda.imag().is_zero()) return lift_series<GaussianRational>(equivariant_series<Rational>(a, lambda.real(), qorder));
  return equivariant_series<GaussianRational>(a, lambda, qorder);
}

RigidityReport rigidity_check(const CircleActionData& a, const std::vector<GaussianRational>& samples, int qorder) {
  if (samples.empty()) fail(ErrorCode::kDomain, "rigidity check needs at least one sample");
  // Agreement at two points can be accidental.
  if (a.ambient.spin && samples.size() < 3) fail(ErrorCode::kDomain, "rigidity check on a spin ambient needs at least 3 samples");
  RigidityReport r;
  r.samples = samples;
  r.spin = a.ambient.spin;
  for (const auto& lambda : samples) r.values.push_back(equivariant_series_at(a, lambda, qorder));
  r.nonequivariant = lift_series<GaussianRational>(loop_sign_series(a.ambient, qorder).series);
  const int order = 2 * qorder;
  r.constant = true;
  r.q0_constant = true;
  r.matches_direct = true;
  for (const QSeriesQi& v : r.values) {
    r.constant = r.constant && v.agrees_with(r.values.front(), order);
    r.q0_constant = r.q0_constant && v.coeff(0) == r.values.front().coeff(0);
    r.matches_direct = r.matches_direct && v.agrees_with(r.nonequivariant, order);
  }
  if (r.constant && r.matches_direct) {
    r.status = "PASS";
  } else if (r.spin || !r.q0_constant) {
    r.status = "FAIL";
  } else {
    r.status = "OBSERVED";
  }
  return r;
}

namespace {

// Total Betti number of a truncated polynomial ring on even-degree generators.
Rational rank_euler(const ManifoldModel& m) {
  Rational total(1);
  for (const Generator& g : m.cohomology.generators) total *= Rational(g.cap + 1);
  return total;
}

}  // namespace

EulerCheck euler_fixed_check(const CircleActionData& a) {
  EulerCheck out;
  auto chi = [&](const ManifoldModel& m) {
    if (m.tangent.style == TangentStyle::kChern) return euler_characteristic(m);
    out.partial = true;
    return rank_euler(m);
  };
  for (const FixedComponent& c : a.components) out.fixed += chi(c.model);
  out.ambient = chi(a.ambient);
  out.holds = out.fixed == out.ambient;
  return out;
}

TruncPoly<QSeriesQi> nx_pair_at_i(int qorder, int cap) {
  using QK = QSeriesQi;
  const std::vector<Variable> vars = {{"y", cap}};
  const TruncPoly<QK> y = TruncPoly<QK>::variable(vars, 0);
  const Series<QK> nf = normal_factor<GaussianRational>(GaussianRational::i(), qorder, std::max(cap, 1));
  return (ps_compose(nf, y) * ps_compose(nf, -y)).map_coefficients<QK>([&](const QK& c) { return c.truncated(2 * qorder); });
}

Json action_to_json(const CircleActionData& a) {
  Json out;
  out["name"] = a.name;
  out["ambient"] = model_to_json(a.ambient);
  Json comps = Json::array();
  for (const FixedComponent& c : a.components) {
    Json comp;
    comp["model"] = c.model == builtin("pt") ? Json("point") : model_to_json(c.model);
    Json normal = Json::array();
    for (const NormalEntry& e : c.normal) normal.push_back({{"chern", form_to_json(e.chern)}, {"weight", e.weight}});
    comp["normal"] = normal;
    comps.push_back(comp);
  }
  out["components"] = comps;
  return out;
}

namespace {

ManifoldModel model_ref_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "point") return builtin("pt");
    return resolve_model_ref(j.get<std::string>());
  }
  if (j.is_object()) return model_from_json(j);
  fail(ErrorCode::kSchema, where + ": expected a model reference, \"point\", or an inline model");
}

}  // namespace

CircleActionData action_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kSchema, "action document must be a JSON object");
  if (!j.contains("ambient")) fail(ErrorCode::kSchema, "action: missing field 'ambient'");
  if (!j.contains("components") || !j.at("components").is_array()) fail(ErrorCode::kSchema, "action: 'components' must be an array");
  CircleActionData a;
  a.ambient = model_ref_from_json(j.at("ambient"), "action.ambient");
  a.name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "action on " + a.ambient.name;
  a.provenance = "action file";
  for (const Json& comp : j.at("components")) {
    if (!comp.is_object() || !comp.contains("model")) fail(ErrorCode::kSchema, "action component: missing field 'model'");
    FixedComponent c;
    c.model = model_ref_from_json(comp.at("model"), "action component");
    if (comp.contains("normal")) {
      if (!comp.at("normal").is_array()) fail(ErrorCode::kSchema, "action component: 'normal' must be an array");
      for (const Json& e : comp.at("normal")) {
        if (!e.is_object() || !e.contains("weight") || !e.at("weight").is_number_integer()) {
          fail(ErrorCode::kSchema, "normal entry: 'weight' must be an integer");
        }
        const LinearForm chern = e.contains("chern") ? form_from_json(e.at("chern"), "normal entry chern") : LinearForm{};
        c.normal.push_back({chern, e.at("weight").get<int>()});
      }
    }
    a.components.push_back(c);
  }
  a.validate();
  return a;
}

CircleActionData load_action(const std::string& path) {
  CircleActionData a = action_from_json(read_json_file(path));
  a.provenance = "file " + path;
  return a;
}

void save_action(const CircleActionData& a, const std::string& path) { write_json_file(action_to_json(a), path); }

CircleActionData resolve_action_ref(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return builtin_action(ref.substr(prefix.size()));
  return load_action(ref);
}

}  // namespace ellgen
