#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellgen/rational.hpp"
#include "ellgen/trunc_poly.hpp"

namespace ellgen {

// Linear combination of cohomology generators, symbol -> coefficient.
using LinearForm = std::map<std::string, Rational>;

enum class TangentStyle { kChern, kPontryagin };

const char* tangent_style_name(TangentStyle style);

struct Generator {
  std::string symbol;
  int degree = 2;  // 2 or 4
  int cap = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Q[generators]/(v^{cap+1}) with a fundamental class: <top monomial, [M]> = pairing.
struct CohomologyModel {
  std::vector<Generator> generators;
  Rational pairing{1};

  int real_dimension() const;
  std::vector<Variable> variables() const;
  const Generator* find(const std::string& symbol) const;

  template <CoefficientRing R>
  TruncPoly<R> form(const LinearForm& f) const {
    TruncPoly<R> out(variables());
    for (const auto& [sym, c] : f) {
      std::size_t index = 0;
      while (index < generators.size() && generators[index].symbol != sym) ++index;
      if (index == generators.size()) fail(ErrorCode::kSchema, "unknown generator '" + sym + "' in linear form");
      out += R(c) * TruncPoly<R>::variable(variables(), index);
    }
    return out;
  }
  template <CoefficientRing R>
  TruncPoly<R> one() const {
    return TruncPoly<R>::constant(variables(), ring_one<R>());
  }
  // <cls, [M]>: coefficient of the top monomial times the pairing.
  template <CoefficientRing R>
  R evaluate(const TruncPoly<R>& cls) const {
    return cls.top_coefficient() * R(pairing);
  }

  friend bool operator==(const CohomologyModel&, const CohomologyModel&) = default;
};

// One (virtual) summand of the tangent bundle. Chern style: a line bundle with
// first Chern class `form` (degree 2). Pontryagin style: a real 2-plane bundle
// whose Pontryagin root squared is `form` (degree 4), or form^2 when `squared`
// is set (degree-2 form, used when Chern data is embedded in a product).
struct TangentEntry {
  LinearForm form;
  int mult = 1;
  bool squared = false;
  friend bool operator==(const TangentEntry&, const TangentEntry&) = default;
};

struct TangentData {
  TangentStyle style = TangentStyle::kChern;
  int delta = 0;  // trivial complex summands to remove: virtual rank - actual rank
  std::vector<TangentEntry> entries;
  friend bool operator==(const TangentData&, const TangentData&) = default;
};

struct ManifoldModel {
  std::string name;
  int dim_real = 0;
  bool spin = false;
  CohomologyModel cohomology;
  TangentData tangent;
  std::string orientation_note;

  // Real dimension 4k -> k, or -1.
  int quarter_dimension() const { return dim_real % 4 == 0 ? dim_real / 4 : -1; }

  // Throws kSchema / kDimensionMismatch / kZeroPairing.
  void validate() const;

  // Root class of an entry: x (Chern) or x^2 (Pontryagin).
  TruncPoly<Rational> root_class(const TangentEntry& e) const;

  friend bool operator==(const ManifoldModel& a, const ManifoldModel& b) {
    return a.name == b.name && a.dim_real == b.dim_real && a.spin == b.spin && a.cohomology == b.cohomology &&
           a.tangent == b.tangent;
  }
};

// Builtin catalog: "pt", "CP<n>", "HP<n>", "V(n,l)", and products "A x B [x C]".
ManifoldModel builtin(const std::string& name);
std::vector<std::string> builtin_catalog();

// Product with generators renamed symbol_i per factor; mixed styles become Pontryagin.
ManifoldModel product(const std::vector<ManifoldModel>& factors);

TruncPoly<Rational> total_chern_class(const ManifoldModel& m);
TruncPoly<Rational> total_pontryagin_class(const ManifoldModel& m);
Rational euler_characteristic(const ManifoldModel& m);

}  // namespace ellgen
