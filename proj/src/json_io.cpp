#include "ellgen/json_io.hpp"

#include <fstream>
#include <sstream>

namespace ellgen {

Json to_json(const Rational& r) { return r.to_string(); }
Json to_json(const GaussianRational& z) { return z.to_string(); }
Json to_json(const ModularPoly& p) { return p.to_string(); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(ErrorCode::kSchema, where + ": expected a rational string \"p/q\"");
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::kSchema, where + ": missing field '" + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) fail(ErrorCode::kSchema, where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

LinearForm form_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrorCode::kSchema, where + ": linear form must be an object");
  LinearForm f;
  for (const auto& [sym, c] : j.items()) {
    Rational r = rational_from_json(c, where + "." + sym);
    if (!r.is_zero()) f.emplace(sym, r);
  }
  return f;
}

Json form_to_json(const LinearForm& f) {
  Json out = Json::object();
  for (const auto& [sym, c] : f) out[sym] = to_json(c);
  return out;
}

Json model_to_json(const ManifoldModel& m) {
  Json out;
  out["name"] = m.name;
  out["dim_real"] = m.dim_real;
  out["spin"] = m.spin;
  Json gens = Json::array();
  for (const auto& g : m.cohomology.generators) gens.push_back({{"symbol", g.symbol}, {"degree", g.degree}, {"cap", g.cap}});
  out["generators"] = gens;
  out["pairing"] = to_json(m.cohomology.pairing);
  Json entries = Json::array();
  for (const auto& e : m.tangent.entries) {
    Json entry;
    entry["form"] = form_to_json(e.form);
    entry["mult"] = e.mult;
    if (e.squared) entry["square"] = true;
    entries.push_back(entry);
  }
  out["tangent"] = {{"style", tangent_style_name(m.tangent.style)}, {"delta", m.tangent.delta}, {"entries", entries}};
  if (!m.orientation_note.empty()) out["orientation"] = m.orientation_note;
  return out;
}

ManifoldModel model_from_json(const Json& j) {
  const std::string where = "model";
  if (!j.is_object()) fail(ErrorCode::kSchema, "model document must be a JSON object");
  ManifoldModel m;
  const Json& name = field(j, "name", where);
  if (!name.is_string()) fail(ErrorCode::kSchema, "model: 'name' must be a string");
  m.name = name.get<std::string>();
  m.dim_real = int_field(j, "dim_real", where);
  const Json& spin = field(j, "spin", where);
  if (!spin.is_boolean()) fail(ErrorCode::kSchema, "model: 'spin' must be a boolean");
  m.spin = spin.get<bool>();
  const Json& gens = field(j, "generators", where);
  if (!gens.is_array()) fail(ErrorCode::kSchema, "model: 'generators' must be an array");
  for (const Json& g : gens) {
    const Json& sym = field(g, "symbol", "generator");
    if (!sym.is_string()) fail(ErrorCode::kSchema, "generator: 'symbol' must be a string");
    m.cohomology.generators.push_back({sym.get<std::string>(), int_field(g, "degree", "generator"), int_field(g, "cap", "generator")});
  }
  m.cohomology.pairing = rational_from_json(field(j, "pairing", where), "model.pairing");
  const Json& tangent = field(j, "tangent", where);
  const Json& style = field(tangent, "style", "tangent");
  if (style == "chern") {
    m.tangent.style = TangentStyle::kChern;
  } else if (style == "pontryagin") {
    m.tangent.style = TangentStyle::kPontryagin;
  } else {
    fail(ErrorCode::kSchema, "tangent: 'style' must be \"chern\" or \"pontryagin\"");
  }
  m.tangent.delta = int_field(tangent, "delta", "tangent");
  const Json& entries = field(tangent, "entries", "tangent");
  if (!entries.is_array()) fail(ErrorCode::kSchema, "tangent: 'entries' must be an array");
  for (const Json& e : entries) {
    TangentEntry entry{form_from_json(field(e, "form", "tangent entry"), "tangent entry form"),
                       int_field(e, "mult", "tangent entry"), false};
    if (e.contains("square")) {
      if (!e.at("square").is_boolean()) fail(ErrorCode::kSchema, "tangent entry: 'square' must be a boolean");
      entry.squared = e.at("square").get<bool>();
    }
    m.tangent.entries.push_back(entry);
  }
  if (j.contains("orientation") && j.at("orientation").is_string()) m.orientation_note = j.at("orientation").get<std::string>();
  m.validate();
  return m;
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kSchema, where + ": invalid JSON: " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kSchema, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

void write_json_file(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kSchema, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

ManifoldModel load_model(const std::string& path) { return model_from_json(read_json_file(path)); }

void save_model(const ManifoldModel& m, const std::string& path) { write_json_file(model_to_json(m), path); }

ManifoldModel resolve_model_ref(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return builtin(ref.substr(prefix.size()));
  return load_model(ref);
}

}  // namespace ellgen
