#pragma once

#include <map>
#include <string>
#include <utility>

#include "ellgen/rational.hpp"
#include "ellgen/ring.hpp"

namespace ellgen {

// Element of Q[delta, epsilon], graded by weight(delta) = 2, weight(epsilon) = 4.
// This is the target ring of the universal level-2 elliptic genus.
class ModularPoly {
 public:
  using Exponent = std::pair<int, int>;  // (delta power, epsilon power)

  ModularPoly() = default;
  ModularPoly(Rational c);  // NOLINT(google-explicit-constructor)
  ModularPoly(long c) : ModularPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ModularPoly delta() { return monomial(1, 0, Rational(1)); }
  static ModularPoly epsilon() { return monomial(0, 1, Rational(1)); }
  static ModularPoly monomial(int delta_power, int epsilon_power, Rational c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coefficient(int delta_power, int epsilon_power) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Only nonzero constants are units.
  ModularPoly inverse() const;

  // True when every monomial has the given weight (zero is homogeneous of every weight).
  bool is_homogeneous(int weight) const;

  // Substitute concrete values (rationals or q-series) for delta and epsilon.
  template <CoefficientRing R>
  R evaluate(const R& delta_value, const R& epsilon_value) const {
    R out = ring_zero<R>();
    for (const auto& [e, c] : terms_) {
      out = out + R(c) * ring_pow(delta_value, e.first) * ring_pow(epsilon_value, e.second);
    }
    return out;
  }

  ModularPoly operator-() const;
  ModularPoly& operator+=(const ModularPoly& o);
  ModularPoly& operator-=(const ModularPoly& o);
  friend ModularPoly operator+(ModularPoly a, const ModularPoly& b) { return a += b; }
  friend ModularPoly operator-(ModularPoly a, const ModularPoly& b) { return a -= b; }
  friend ModularPoly operator*(const ModularPoly& a, const ModularPoly& b);
  friend bool operator==(const ModularPoly&, const ModularPoly&) = default;

  // Human-readable: "epsilon", "3/2*delta^2 - 1/2*epsilon", "0".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

}  // namespace ellgen
