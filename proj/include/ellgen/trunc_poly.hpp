#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellgen/errors.hpp"
#include "ellgen/ring.hpp"
#include "ellgen/series.hpp"

namespace ellgen {

// A generator of a truncated polynomial ring: monomials with exponent > cap vanish.
struct Variable {
  std::string symbol;
  int cap = 0;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Sparse multivariate polynomial in Q-algebra R[v_1..v_n]/(v_i^{cap_i+1}).
// Invariants: no stored monomial exceeds a cap, no stored zero coefficient.
template <CoefficientRing R>
class TruncPoly {
 public:
  using Exponents = std::vector<int>;

  TruncPoly() = default;
  explicit TruncPoly(std::vector<Variable> vars) : vars_(std::move(vars)) {
    for (const auto& v : vars_) {
      if (v.cap < 0) fail(ErrorCode::kDomain, "negative cap for variable " + v.symbol);
    }
  }

  static TruncPoly constant(std::vector<Variable> vars, const R& c) {
    TruncPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }
  static TruncPoly variable(std::vector<Variable> vars, std::size_t index) {
    TruncPoly p(std::move(vars));
    if (index >= p.vars_.size()) fail(ErrorCode::kDomain, "variable index out of range");
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, ring_one<R>());
    return p;
  }
  static TruncPoly monomial(std::vector<Variable> vars, Exponents e, const R& c) {
    TruncPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) fail(ErrorCode::kStructural, "exponent vector length mismatch");
    p.add_term(e, c);
    return p;
  }

  const std::vector<Variable>& vars() const { return vars_; }
  const std::map<Exponents, R>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  R coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? ring_zero<R>() : it->second;
  }
  R constant_term() const { return coeff(Exponents(vars_.size(), 0)); }
  // Coefficient of the top monomial prod v_i^{cap_i}.
  R top_coefficient() const {
    Exponents e;
    for (const auto& v : vars_) e.push_back(v.cap);
    return coeff(e);
  }
  // Sum of caps: every monomial of higher total degree vanishes.
  int nilpotency_bound() const {
    int n = 0;
    for (const auto& v : vars_) n += v.cap;
    return n;
  }
  // Bound on j with (*this)^j != 0 when the constant term is zero: every
  // monomial has total degree >= m, so the j-th power vanishes once j*m > sum of caps.
  int nilpotency_index() const {
    int m = 0;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int x : e) d += x;
      if (d == 0) continue;
      m = m == 0 ? d : std::min(m, d);
    }
    return m == 0 ? 0 : nilpotency_bound() / m;
  }

  TruncPoly operator-() const {
    TruncPoly out(vars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }
  TruncPoly& operator+=(const TruncPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TruncPoly& operator-=(const TruncPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
  friend TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    a.require_same_vars(b);
    TruncPoly out(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        bool fits = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > a.vars_[i].cap) {
            fits = false;
            break;
          }
        }
        if (fits) out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  friend TruncPoly operator*(const R& c, const TruncPoly& a) {
    TruncPoly out(a.vars_);
    for (const auto& [e, ca] : a.terms_) out.add_term(e, c * ca);
    return out;
  }
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }

  // Multiplicative inverse; the constant term must be a unit of R.
  TruncPoly inverse() const {
    const R c0 = constant_term();
    const R inv0 = c0.inverse();  // throws kNonUnit
    // a = c0 (1 + n) with n nilpotent: a^{-1} = c0^{-1} sum (-n)^j.
    const TruncPoly minus_n = -(inv0 * (*this - constant(vars_, c0)));
    TruncPoly out = constant(vars_, ring_one<R>());
    TruncPoly power = out;
    for (int j = 1; j <= nilpotency_bound(); ++j) {
      power = power * minus_n;
      if (power.is_zero()) break;
      out += power;
    }
    return inv0 * out;
  }

  template <CoefficientRing S, class Fn>
  TruncPoly<S> map_coefficients(Fn&& fn) const {
    TruncPoly<S> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

  void add_term(const Exponents& e, const R& c) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) fail(ErrorCode::kDomain, "negative exponent");
      if (e[i] > vars_[i].cap) return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += "*" + vars_[i].symbol;
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
      }
    }
    return out;
  }

 private:
  void require_same_vars(const TruncPoly& o) const {
    if (vars_ != o.vars_) fail(ErrorCode::kStructural, "truncated polynomial variable/cap mismatch");
  }

  std::vector<Variable> vars_;
  std::map<Exponents, R> terms_;
};

template <CoefficientRing R>
TruncPoly<R> ps_exp(const TruncPoly<R>& a) {
  if (!a.constant_term().is_zero()) fail(ErrorCode::kDomain, "exp requires zero constant term");
  TruncPoly<R> out = TruncPoly<R>::constant(a.vars(), ring_one<R>());
  TruncPoly<R> power = out;
  for (int j = 1; j <= a.nilpotency_bound(); ++j) {
    power = R(Rational(1, j)) * (power * a);
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

// f(g) for a univariate series f and a nilpotent g (zero constant term).
// f must be known through g's nilpotency bound; otherwise terms would be lost.
template <CoefficientRing R>
TruncPoly<R> ps_compose(const Series<R>& f, const TruncPoly<R>& g) {
  if (!g.constant_term().is_zero()) fail(ErrorCode::kDomain, "compose requires inner polynomial with zero constant term");
  const int needed = g.nilpotency_index();
  if (f.cap() < needed) {
    fail(ErrorCode::kStructural, "series cap " + std::to_string(f.cap()) + " below nilpotency bound " + std::to_string(needed));
  }
  TruncPoly<R> out = TruncPoly<R>::constant(g.vars(), f[needed]);
  for (int j = needed - 1; j >= 0; --j) {
    out = out * g;
    out += TruncPoly<R>::constant(g.vars(), f[j]);
  }
  return out;
}

template <CoefficientRing R>
TruncPoly<R> ps_inv(const TruncPoly<R>& a) {
  return a.inverse();
}

}  // namespace ellgen
