#include <cstdio>
#include <filesystem>

#include "doctest.h"

#include "ellgen/genus.hpp"
#include "ellgen/json_io.hpp"
#include "ellgen/manifold.hpp"
#include "test_support.hpp"

using namespace ellgen;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInternalInconsistency;
}

std::string temp_path(const std::string& stem) {
  return (std::filesystem::temp_directory_path() / ("ellgen_" + stem + ".json")).string();
}

// Oracle: coefficients of (1+h)^a (1+l h)^{-1} by the binomial and geometric series.
Rational chern_oracle(long a, long l, int degree) {
  Rational sum(0);
  for (int j = 0; j <= degree; ++j) sum += binomial(Rational(a), j) * Rational(-l).pow(degree - j);
  return sum;
}

}  // namespace

TEST_CASE("builtin V(4,4): total Chern class and pairing") {
  const ManifoldModel v = builtin("V(4,4)");
  const auto c = total_chern_class(v);
  for (int d = 0; d <= 4; ++d) CHECK(c.coeff({d}) == chern_oracle(6, 4, d));
  CHECK(v.cohomology.pairing == Rational(4));
  CHECK(v.spin);
  CHECK(euler_characteristic(v) == Rational(188));
}

TEST_CASE("builtin catalog basics") {
  const ManifoldModel cp1 = builtin("CP1");
  CHECK(total_chern_class(cp1).coeff({1}) == Rational(2));
  CHECK(euler_characteristic(builtin("CP2")) == Rational(3));
  CHECK(euler_characteristic(builtin("CP1 x CP1")) == Rational(4));
  CHECK(euler_characteristic(builtin("pt")) == Rational(1));

  const auto p = total_pontryagin_class(builtin("HP2"));
  CHECK(p.coeff({1}) == Rational(2));
  CHECK(p.coeff({2}) == Rational(7));
  CHECK(code_of([] { euler_characteristic(builtin("HP2")); }) == ErrorCode::kUnsupported);

  CHECK(code_of([] { builtin("RP2"); }) == ErrorCode::kUnknownName);
  CHECK(code_of([] { builtin("CP0"); }) == ErrorCode::kDomain);
  CHECK(code_of([] { builtin("V(3,0)"); }) == ErrorCode::kDomain);
  CHECK(code_of([] { builtin("CP1 x CP1 x CP1 x CP1"); }) == ErrorCode::kDomain);
  for (const auto& name : builtin_catalog()) CHECK_NOTHROW(builtin(name));
}

TEST_CASE("V(n,l): first Chern class and spin flag") {
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= 5; ++l) {
      const ManifoldModel v = builtin("V(" + std::to_string(n) + "," + std::to_string(l) + ")");
      CHECK(total_chern_class(v).coeff({1}) == Rational(n + 2 - l));
      CHECK(v.spin == ((n + 2 - l) % 2 == 0));
    }
  }
}

TEST_CASE("mixed products embed Chern data as squared Pontryagin entries") {
  const ManifoldModel m = builtin("HP2 x CP2");
  CHECK(m.tangent.style == TangentStyle::kPontryagin);
  CHECK(m.dim_real == 12);
  CHECK(!m.spin);
  bool squared = false;
  for (const auto& e : m.tangent.entries) squared |= e.squared;
  CHECK(squared);
  // p(HP2 x CP2) = p(HP2) p(CP2); p(CP2) = (1+h^2)^3.
  const auto p = total_pontryagin_class(m);
  CHECK(p.coeff({1, 2}) == Rational(2 * 3));
  CHECK(p.coeff({2, 2}) == Rational(7 * 3));
}

TEST_CASE("property: product pairing is multiplicative") {
  test_support::Rng rng(19);
  const std::vector<std::string> names{"CP1", "CP2", "CP3", "HP1", "HP2", "V(2,3)", "V(3,2)"};
  for (int trial = 0; trial < 30; ++trial) {
    const ManifoldModel a = builtin(names[rng.uniform(0, names.size() - 1)]);
    const ManifoldModel b = builtin(names[rng.uniform(0, names.size() - 1)]);
    const ManifoldModel ab = product({a, b});
    // top class of each factor, times random scalars
    const Rational x = rng.rational(6), y = rng.rational(6);
    std::vector<int> top;
    for (const auto& g : ab.cohomology.generators) top.push_back(g.cap);
    const auto cls = TruncPoly<Rational>::monomial(ab.cohomology.variables(), top, x * y);
    const Rational ea = a.cohomology.evaluate(TruncPoly<Rational>::monomial(a.cohomology.variables(), {a.cohomology.generators[0].cap}, x));
    const Rational eb = b.cohomology.evaluate(TruncPoly<Rational>::monomial(b.cohomology.variables(), {b.cohomology.generators[0].cap}, y));
    CHECK(ab.cohomology.evaluate(cls) == ea * eb);
  }
}

TEST_CASE("model files round-trip and report distinct errors") {
  const std::string path = temp_path("cp2");
  save_model(builtin("CP2"), path);
  CHECK(load_model(path) == builtin("CP2"));
  for (const auto& name : builtin_catalog()) {
    const ManifoldModel m = builtin(name);
    CHECK(model_from_json(model_to_json(m)) == m);
  }

  Json bad = model_to_json(builtin("CP2"));
  bad["tangent"]["delta"] = 0;
  CHECK(code_of([&] { model_from_json(bad); }) == ErrorCode::kDimensionMismatch);
  bad = model_to_json(builtin("CP2"));
  bad["pairing"] = "0";
  CHECK(code_of([&] { model_from_json(bad); }) == ErrorCode::kZeroPairing);
  bad = model_to_json(builtin("CP2"));
  bad.erase("generators");
  CHECK(code_of([&] { model_from_json(bad); }) == ErrorCode::kSchema);
  bad = model_to_json(builtin("CP2"));
  bad["dim_real"] = 6;
  CHECK(code_of([&] { model_from_json(bad); }) == ErrorCode::kDimensionMismatch);
  CHECK(code_of([] { parse_json_text("{", "inline"); }) == ErrorCode::kSchema);

  // HP3 written by hand: loads, but Euler characteristic is unsupported.
  const Json hp3 = parse_json_text(R"({"name": "HP3", "dim_real": 12, "spin": true,
      "generators": [{"symbol": "u", "degree": 4, "cap": 3}], "pairing": "1",
      "tangent": {"style": "pontryagin", "delta": 1,
                  "entries": [{"form": {"u": "1"}, "mult": 8}, {"form": {"u": "4"}, "mult": -1}]}})",
                                   "inline");
  const ManifoldModel m = model_from_json(hp3);
  CHECK(m == builtin("HP3"));
  CHECK(code_of([&] { euler_characteristic(m); }) == ErrorCode::kUnsupported);
  std::remove(path.c_str());
}
