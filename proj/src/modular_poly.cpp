#include "ellgen/modular_poly.hpp"

#include "ellgen/errors.hpp"

namespace ellgen {

ModularPoly::ModularPoly(Rational c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, std::move(c));
}

ModularPoly ModularPoly::monomial(int delta_power, int epsilon_power, Rational c) {
  if (delta_power < 0 || epsilon_power < 0) fail(ErrorCode::kDomain, "negative exponent in Q[delta,epsilon]");
  ModularPoly p;
  p.add_term({delta_power, epsilon_power}, c);
  return p;
}

Rational ModularPoly::coefficient(int delta_power, int epsilon_power) const {
  const auto it = terms_.find({delta_power, epsilon_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ModularPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

ModularPoly ModularPoly::inverse() const {
  if (is_zero() || !is_constant()) fail(ErrorCode::kNonUnit, "non-constant element of Q[delta,epsilon] is not a unit");
  return ModularPoly(terms_.begin()->second.inverse());
}

bool ModularPoly::is_homogeneous(int weight) const {
  for (const auto& [e, c] : terms_) {
    if (2 * e.first + 4 * e.second != weight) return false;
  }
  return true;
}

void ModularPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ModularPoly ModularPoly::operator-() const {
  ModularPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

ModularPoly& ModularPoly::operator+=(const ModularPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ModularPoly& ModularPoly::operator-=(const ModularPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ModularPoly operator*(const ModularPoly& a, const ModularPoly& b) {
  ModularPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return out;
}

std::string ModularPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest delta power first gives "3/2*delta^2 - 1/2*epsilon".
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string monomial;
    auto append = [&monomial](const char* name, int power) {
      if (power == 0) return;
      if (!monomial.empty()) monomial += "*";
      monomial += name;
      if (power > 1) monomial += "^" + std::to_string(power);
    };
    append("delta", e.first);
    append("epsilon", e.second);
    const Rational mag = c.abs();
    std::string term;
    if (monomial.empty()) {
      term = mag.to_string();
    } else if (mag == Rational(1)) {
      term = monomial;
    } else {
      term = mag.to_string() + "*" + monomial;
    }
    if (out.empty()) {
      out = c.sign() < 0 ? "-" + term : term;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace ellgen
