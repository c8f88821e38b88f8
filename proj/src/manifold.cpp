#include "ellgen/manifold.hpp"

#include <cctype>
#include <regex>
#include <set>

#include "ellgen/genus.hpp"

namespace ellgen {

const char* tangent_style_name(TangentStyle style) {
  return style == TangentStyle::kChern ? "chern" : "pontryagin";
}

int CohomologyModel::real_dimension() const {
  int d = 0;
  for (const auto& g : generators) d += g.degree * g.cap;
  return d;
}

std::vector<Variable> CohomologyModel::variables() const {
  std::vector<Variable> vars;
  vars.reserve(generators.size());
  for (const auto& g : generators) vars.push_back({g.symbol, g.cap});
  return vars;
}

const Generator* CohomologyModel::find(const std::string& symbol) const {
  for (const auto& g : generators) {
    if (g.symbol == symbol) return &g;
  }
  return nullptr;
}

void ManifoldModel::validate() const {
  std::set<std::string> seen;
  for (const auto& g : cohomology.generators) {
    if (g.symbol.empty()) fail(ErrorCode::kSchema, name + ": empty generator symbol");
    if (!seen.insert(g.symbol).second) fail(ErrorCode::kSchema, name + ": duplicate generator '" + g.symbol + "'");
    if (g.degree != 2 && g.degree != 4) fail(ErrorCode::kSchema, name + ": generator degree must be 2 or 4");
    if (g.cap < 0) fail(ErrorCode::kSchema, name + ": negative cap");
  }
  if (cohomology.pairing.is_zero()) fail(ErrorCode::kZeroPairing, name + ": fundamental class pairs to zero");
  if (dim_real != cohomology.real_dimension()) {
    fail(ErrorCode::kDimensionMismatch, name + ": dim_real " + std::to_string(dim_real) + " but generators span " +
                                            std::to_string(cohomology.real_dimension()));
  }
  long rank = 0;
  for (const auto& e : tangent.entries) {
    rank += e.mult;
    if (e.form.empty()) fail(ErrorCode::kSchema, name + ": empty linear form in tangent entry");
    int want = 2;
    if (tangent.style == TangentStyle::kChern) {
      if (e.squared) fail(ErrorCode::kSchema, name + ": squared entries require Pontryagin style");
    } else if (!e.squared) {
      want = 4;
    }
    for (const auto& [sym, c] : e.form) {
      const Generator* g = cohomology.find(sym);
      if (g == nullptr) fail(ErrorCode::kSchema, name + ": tangent form uses unknown generator '" + sym + "'");
      if (g->degree != want) {
        fail(ErrorCode::kSchema, name + ": tangent form on '" + sym + "' needs a degree-" + std::to_string(want) + " generator");
      }
    }
  }
  if (rank - tangent.delta != dim_real / 2 || dim_real % 2 != 0) {
    fail(ErrorCode::kDimensionMismatch, name + ": sum of multiplicities minus delta is " + std::to_string(rank - tangent.delta) +
                                            ", expected " + std::to_string(dim_real / 2));
  }
}

TruncPoly<Rational> ManifoldModel::root_class(const TangentEntry& e) const {
  TruncPoly<Rational> x = cohomology.form<Rational>(e.form);
  return e.squared ? x * x : x;
}

namespace {

ManifoldModel point_model() {
  ManifoldModel m;
  m.name = "pt";
  m.spin = true;
  m.orientation_note = "positively oriented point";
  return m;
}

ManifoldModel cp_model(int n) {
  if (n < 1) fail(ErrorCode::kDomain, "CPn needs n >= 1");
  ManifoldModel m;
  m.name = "CP" + std::to_string(n);
  m.dim_real = 2 * n;
  m.spin = (n + 1) % 2 == 0;
  m.cohomology.generators = {{"h", 2, n}};
  m.cohomology.pairing = Rational(1);
  // Euler sequence: T + C = (n+1) O(1).
  m.tangent = {TangentStyle::kChern, 1, {{{{"h", Rational(1)}}, n + 1, false}}};
  m.orientation_note = "complex orientation, <h^n,[CPn]> = 1";
  return m;
}

ManifoldModel hp_model(int n) {
  if (n < 1) fail(ErrorCode::kDomain, "HPn needs n >= 1");
  ManifoldModel m;
  m.name = "HP" + std::to_string(n);
  m.dim_real = 4 * n;
  m.spin = true;
  m.cohomology.generators = {{"u", 4, n}};
  m.cohomology.pairing = Rational(1);
  // p(HPn) = (1+u)^{2n+2} (1+4u)^{-1}.
  m.tangent = {TangentStyle::kPontryagin, 1,
               {{{{"u", Rational(1)}}, 2 * n + 2, false}, {{{"u", Rational(4)}}, -1, false}}};
  m.orientation_note = "<u^n,[HPn]> = 1, so that sign(HP2) = 1";
  return m;
}

ManifoldModel hypersurface_model(int n, int l) {
  if (n < 1 || l < 1) fail(ErrorCode::kDomain, "V(n,l) needs n >= 1 and l >= 1");
  ManifoldModel m;
  m.name = "V(" + std::to_string(n) + "," + std::to_string(l) + ")";
  m.dim_real = 2 * n;
  m.spin = (n + 2 - l) % 2 == 0;
  m.cohomology.generators = {{"h", 2, n}};
  m.cohomology.pairing = Rational(l);
  // TV + C = (n+2) O(1) - O(l) restricted from CP^{n+1}.
  m.tangent = {TangentStyle::kChern, 1, {{{{"h", Rational(1)}}, n + 2, false}, {{{"h", Rational(l)}}, -1, false}}};
  m.orientation_note = "complex orientation, <h^n,[V]> = l";
  return m;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

int parse_small(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 3) fail(ErrorCode::kUnknownName, "bad parameter in builtin '" + whole + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorCode::kUnknownName, "bad parameter in builtin '" + whole + "'");
  }
  return std::stoi(s);
}

ManifoldModel single_builtin(const std::string& raw) {
  const std::string name = strip(raw);
  static const std::regex kProjective(R"((CP|HP)\s*(\d+))");
  static const std::regex kHypersurface(R"(V\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch match;
  ManifoldModel m;
  if (name == "pt" || name == "point") {
    m = point_model();
  } else if (std::regex_match(name, match, kProjective)) {
    const int n = parse_small(match[2].str(), name);
    m = match[1].str() == "CP" ? cp_model(n) : hp_model(n);
  } else if (std::regex_match(name, match, kHypersurface)) {
    m = hypersurface_model(parse_small(match[1].str(), name), parse_small(match[2].str(), name));
  } else {
    fail(ErrorCode::kUnknownName, "unknown builtin manifold '" + name + "'");
  }
  m.validate();
  catalog_self_check(m);
  return m;
}

}  // namespace

ManifoldModel product(const std::vector<ManifoldModel>& factors) {
  if (factors.empty()) return point_model();
  if (factors.size() == 1) return factors.front();
  if (factors.size() > 3) fail(ErrorCode::kDomain, "products are limited to three factors");
  bool any_pontryagin = false;
  for (const auto& f : factors) any_pontryagin |= f.tangent.style == TangentStyle::kPontryagin;

  ManifoldModel out;
  out.spin = true;
  out.tangent.style = any_pontryagin ? TangentStyle::kPontryagin : TangentStyle::kChern;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ManifoldModel& f = factors[i];
    const std::string suffix = "_" + std::to_string(i + 1);
    out.name += (i ? " x " : "") + f.name;
    out.dim_real += f.dim_real;
    out.spin = out.spin && f.spin;
    out.cohomology.pairing *= f.cohomology.pairing;
    for (Generator g : f.cohomology.generators) {
      g.symbol += suffix;
      out.cohomology.generators.push_back(g);
    }
    out.tangent.delta += f.tangent.delta;
    for (const TangentEntry& e : f.tangent.entries) {
      TangentEntry renamed{{}, e.mult, e.squared};
      for (const auto& [sym, c] : e.form) renamed.form.emplace(sym + suffix, c);
      // A complex line with class x has Pontryagin root square x^2.
      if (any_pontryagin && f.tangent.style == TangentStyle::kChern) renamed.squared = true;
      out.tangent.entries.push_back(renamed);
    }
  }
  out.orientation_note = "product orientation";
  out.validate();
  return out;
}

ManifoldModel builtin(const std::string& name) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : name) {
    if (c == 'x' || c == '*') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() == 1) return single_builtin(parts.front());
  std::vector<ManifoldModel> factors;
  for (const auto& p : parts) factors.push_back(single_builtin(p));
  return product(factors);
}

std::vector<std::string> builtin_catalog() {
  return {"CP1", "CP2", "CP3", "CP4", "CP5", "CP6", "CP7", "CP8", "HP1", "HP2", "HP3",
          "V(4,4)", "V(6,6)", "V(8,8)", "CP2 x CP2", "HP2 x CP2", "CP1 x CP1"};
}

TruncPoly<Rational> total_chern_class(const ManifoldModel& m) {
  if (m.tangent.style != TangentStyle::kChern) fail(ErrorCode::kUnsupported, m.name + ": Chern classes need Chern-style tangent data");
  TruncPoly<Rational> c = m.cohomology.one<Rational>();
  for (const auto& e : m.tangent.entries) {
    TruncPoly<Rational> factor = m.cohomology.one<Rational>() + m.root_class(e);
    if (e.mult < 0) factor = factor.inverse();
    for (int j = 0; j < std::abs(e.mult); ++j) c = c * factor;
  }
  return c;
}

TruncPoly<Rational> total_pontryagin_class(const ManifoldModel& m) {
  TruncPoly<Rational> p = m.cohomology.one<Rational>();
  for (const auto& e : m.tangent.entries) {
    TruncPoly<Rational> root = m.root_class(e);
    if (m.tangent.style == TangentStyle::kChern) root = root * root;
    TruncPoly<Rational> factor = m.cohomology.one<Rational>() + root;
    if (e.mult < 0) factor = factor.inverse();
    for (int j = 0; j < std::abs(e.mult); ++j) p = p * factor;
  }
  return p;
}

Rational euler_characteristic(const ManifoldModel& m) {
  if (m.tangent.style != TangentStyle::kChern) {
    fail(ErrorCode::kUnsupported, m.name + ": Euler characteristic needs Chern-style tangent data");
  }
  // All generators have degree 2, so the top monomial is the only class in top degree.
  return m.cohomology.evaluate(total_chern_class(m));
}

}  // namespace ellgen
