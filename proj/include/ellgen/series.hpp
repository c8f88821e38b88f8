#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellgen/errors.hpp"
#include "ellgen/rational.hpp"
#include "ellgen/ring.hpp"

namespace ellgen {

// Truncated univariate power series c_0 + c_1 x + ... + c_cap x^cap.
// Monomials above `cap` are discarded; binary operations require equal caps.
template <CoefficientRing R>
class Series {
 public:
  Series() : Series(0) {}
  explicit Series(int cap) : coeffs_(static_cast<std::size_t>(check_cap(cap)) + 1, ring_zero<R>()) {}
  Series(int cap, std::vector<R> coeffs) : Series(cap) {
    for (std::size_t j = 0; j < coeffs.size() && j < coeffs_.size(); ++j) coeffs_[j] = std::move(coeffs[j]);
  }

  static Series constant(int cap, R c) {
    Series s(cap);
    s.coeffs_[0] = std::move(c);
    return s;
  }
  // x (or 0 when cap = 0).
  static Series variable(int cap) {
    Series s(cap);
    if (cap >= 1) s.coeffs_[1] = ring_one<R>();
    return s;
  }

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const R& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  R& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const R& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  // Same coefficients, new truncation cap (padding with zeros when raising).
  Series with_cap(int cap) const {
    Series out(cap);
    for (int j = 0; j <= cap && j <= this->cap(); ++j) out.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(j)];
    return out;
  }

  // Lowest index with nonzero coefficient, or cap + 1 for the zero series.
  int valuation() const {
    for (int j = 0; j <= cap(); ++j) {
      if (!coeffs_[static_cast<std::size_t>(j)].is_zero()) return j;
    }
    return cap() + 1;
  }

  Series operator-() const {
    Series out(cap());
    for (int j = 0; j <= cap(); ++j) out[j] = -(*this)[j];
    return out;
  }
  Series& operator+=(const Series& o) {
    require_same_cap(o);
    for (int j = 0; j <= cap(); ++j) (*this)[j] = (*this)[j] + o[j];
    return *this;
  }
  Series& operator-=(const Series& o) {
    require_same_cap(o);
    for (int j = 0; j <= cap(); ++j) (*this)[j] = (*this)[j] - o[j];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) {
    a.require_same_cap(b);
    Series out(a.cap());
    for (int i = 0; i <= a.cap(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= a.cap(); ++j) {
        if (b[j].is_zero()) continue;
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    return out;
  }
  friend Series operator*(const R& c, const Series& a) {
    Series out(a.cap());
    for (int j = 0; j <= a.cap(); ++j) out[j] = c * a[j];
    return out;
  }
  friend bool operator==(const Series& a, const Series& b) {
    if (a.cap() != b.cap()) return false;
    for (int j = 0; j <= a.cap(); ++j) {
      if (!(a[j] == b[j])) return false;
    }
    return true;
  }

  std::string to_string(const std::string& var = "x") const {
    std::string out;
    for (int j = 0; j <= cap(); ++j) {
      if ((*this)[j].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + (*this)[j].to_string() + ")";
      if (j > 0) out += "*" + var + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return (out.empty() ? "0" : out) + " + O(" + var + "^" + std::to_string(cap() + 1) + ")";
  }

 private:
  static int check_cap(int cap) {
    if (cap < 0) fail(ErrorCode::kDomain, "series cap must be non-negative");
    return cap;
  }
  void require_same_cap(const Series& o) const {
    if (cap() != o.cap()) {
      fail(ErrorCode::kStructural,
           "series cap mismatch: " + std::to_string(cap()) + " vs " + std::to_string(o.cap()));
    }
  }

  std::vector<R> coeffs_;
};

template <CoefficientRing R>
Series<R> ps_inv(const Series<R>& a) {
  const R inv0 = a[0].inverse();  // throws kNonUnit
  Series<R> b(a.cap());
  b[0] = inv0;
  for (int n = 1; n <= a.cap(); ++n) {
    R acc = ring_zero<R>();
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero()) continue;
      acc = acc + a[k] * b[n - k];
    }
    b[n] = -(inv0 * acc);
  }
  return b;
}

template <CoefficientRing R>
Series<R> ps_pow_int(const Series<R>& a, long exponent) {
  if (exponent < 0) return ps_pow_int(ps_inv(a), -exponent);
  Series<R> out = Series<R>::constant(a.cap(), ring_one<R>());
  Series<R> base = a;
  while (exponent > 0) {
    if (exponent & 1) out = out * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return out;
}

// a^e for rational e. The constant term must be 1, except that integer
// exponents accept any unit and rational scalars accept exact rational roots.
// Uses the power recurrence n a_0 b_n = sum_k ((e+1)k - n) a_k b_{n-k}.
template <CoefficientRing R>
Series<R> ps_pow(const Series<R>& a, const Rational& e) {
  if (e.is_integer()) return ps_pow_int(a, e.to_long());
  const R one = ring_one<R>();
  R scale = one;
  Series<R> unit = a;
  if (!(a[0] == one)) {
    if constexpr (std::is_same_v<R, Rational>) {
      if (a[0].is_zero() || a[0].sign() < 0) fail(ErrorCode::kNonUnit, "rational power of series with non-positive constant term");
      Rational root;
      if (!a[0].try_sqrt(root) || !e.denominator().fits_slong_p() || e.denominator() != 2) {
        fail(ErrorCode::kNonUnit, "constant term " + a[0].to_string() + " has no rational root for exponent " + e.to_string());
      }
      scale = root.pow(e.numerator().get_si());
      unit = a[0].inverse() * a;
    } else {
      fail(ErrorCode::kNonUnit, "rational power requires constant term 1");
    }
  }
  Series<R> b(a.cap());
  b[0] = one;
  for (int n = 1; n <= a.cap(); ++n) {
    R acc = ring_zero<R>();
    for (int k = 1; k <= n; ++k) {
      if (unit[k].is_zero()) continue;
      const Rational weight = (e + Rational(1)) * Rational(k) - Rational(n);
      acc = acc + R(weight) * unit[k] * b[n - k];
    }
    b[n] = R(Rational(1, n)) * acc;
  }
  return scale * b;
}

// Half-integer powers, chiefly -1/2 and 1/2.
template <CoefficientRing R>
Series<R> ps_powhalf(const Series<R>& a, const Rational& e) {
  if (!(e.denominator() == 1 || e.denominator() == 2)) fail(ErrorCode::kDomain, "exponent " + e.to_string() + " is not a half-integer");
  return ps_pow(a, e);
}

template <CoefficientRing R>
Series<R> ps_exp(const Series<R>& a) {
  if (!a[0].is_zero()) fail(ErrorCode::kDomain, "exp requires zero constant term");
  Series<R> b(a.cap());
  b[0] = ring_one<R>();
  for (int n = 1; n <= a.cap(); ++n) {
    R acc = ring_zero<R>();
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero()) continue;
      acc = acc + R(Rational(k)) * a[k] * b[n - k];
    }
    b[n] = R(Rational(1, n)) * acc;
  }
  return b;
}

// f(g) with g(0) = 0. f must be known at least to g's cap; the result has g's cap.
template <CoefficientRing R>
Series<R> ps_compose(const Series<R>& f, const Series<R>& g) {
  if (!g[0].is_zero()) fail(ErrorCode::kDomain, "compose requires inner series with zero constant term");
  if (f.cap() < g.cap()) fail(ErrorCode::kStructural, "outer series truncated below inner cap");
  Series<R> out = Series<R>::constant(g.cap(), f[g.cap()]);
  for (int j = g.cap() - 1; j >= 0; --j) {
    out = out * g;
    out[0] = out[0] + f[j];
  }
  return out;
}

// Compositional inverse of g with g(0) = 0, g'(0) = 1.
template <CoefficientRing R>
Series<R> ps_reversion(const Series<R>& g) {
  if (!g[0].is_zero()) fail(ErrorCode::kDomain, "reversion requires g(0) = 0");
  if (g.cap() < 1 || !(g[1] == ring_one<R>())) fail(ErrorCode::kDomain, "reversion requires g'(0) = 1");
  // h = x - G(h) with G = g - x; each pass fixes one more coefficient.
  Series<R> higher = g;
  higher[1] = ring_zero<R>();
  const Series<R> x = Series<R>::variable(g.cap());
  Series<R> h = x;
  for (int pass = 1; pass < g.cap(); ++pass) h = x - ps_compose(higher, h);
  return h;
}

template <CoefficientRing R>
Series<R> ps_integrate(const Series<R>& f) {
  Series<R> out(f.cap() + 1);
  for (int j = 0; j <= f.cap(); ++j) out[j + 1] = R(Rational(1, j + 1)) * f[j];
  return out;
}

template <CoefficientRing R>
Series<R> ps_derivative(const Series<R>& f) {
  Series<R> out(f.cap() > 0 ? f.cap() - 1 : 0);
  for (int j = 1; j <= f.cap(); ++j) out[j - 1] = R(Rational(j)) * f[j];
  return out;
}

template <CoefficientRing R>
R ps_coeff(const Series<R>& f, int exponent) {
  if (exponent < 0) return ring_zero<R>();
  if (exponent > f.cap()) fail(ErrorCode::kStructural, "coefficient requested above truncation cap");
  return f[exponent];
}

// Apply a coefficient map (ring change).
template <CoefficientRing S, CoefficientRing R, class Fn>
Series<S> map_coefficients(const Series<R>& a, Fn&& fn) {
  Series<S> out(a.cap());
  for (int j = 0; j <= a.cap(); ++j) out[j] = fn(a[j]);
  return out;
}

// Classical series with rational coefficients.
Series<Rational> exp_series(int cap, const Rational& scale = Rational(1));

}  // namespace ellgen
