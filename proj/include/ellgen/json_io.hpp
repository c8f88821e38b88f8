#pragma once

#include <string>

#include "json.hpp"

#include "ellgen/manifold.hpp"
#include "ellgen/modular_poly.hpp"
#include "ellgen/qseries.hpp"

namespace ellgen {

using Json = nlohmann::ordered_json;

// Rationals travel as strings "p" or "p/q"; integers are also accepted on input.
Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const ModularPoly& p);
Rational rational_from_json(const Json& j, const std::string& where);

// {"lowest_s_exponent": v, "order": N|null, "coefficients": [...]}
template <CoefficientRing R>
Json series_to_json(const QSeries<R>& s) {
  Json out;
  out["lowest_s_exponent"] = s.is_zero() ? 0 : s.lowest_stored();
  out["order"] = s.is_exact() ? Json(nullptr) : Json(s.order());
  Json coeffs = Json::array();
  for (const R& c : s.stored()) coeffs.push_back(to_json(c));
  out["coefficients"] = coeffs;
  return out;
}

Json form_to_json(const LinearForm& f);
LinearForm form_from_json(const Json& j, const std::string& where);

Json model_to_json(const ManifoldModel& m);
ManifoldModel model_from_json(const Json& j);
Json parse_json_text(const std::string& text, const std::string& where);
Json read_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

ManifoldModel load_model(const std::string& path);
void save_model(const ManifoldModel& m, const std::string& path);
// "builtin:NAME" or a file path.
ManifoldModel resolve_model_ref(const std::string& ref);

}  // namespace ellgen
