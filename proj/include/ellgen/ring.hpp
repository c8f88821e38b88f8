#pragma once

#include <concepts>
#include <string>

#include "ellgen/rational.hpp"

namespace ellgen {

// Commutative Q-algebra scalar. Instantiated with Rational, GaussianRational,
// ModularPoly (Q[delta, epsilon]) and QSeries over the first two.
template <class R>
concept CoefficientRing = std::constructible_from<R, Rational> && std::copyable<R> &&
    requires(const R& a, const R& b) {
      { a + b } -> std::convertible_to<R>;
      { a - b } -> std::convertible_to<R>;
      { a * b } -> std::convertible_to<R>;
      { -a } -> std::convertible_to<R>;
      { a == b } -> std::convertible_to<bool>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.inverse() } -> std::convertible_to<R>;
      { a.to_string() } -> std::convertible_to<std::string>;
    };

template <CoefficientRing R>
R ring_one() {
  return R(Rational(1));
}

template <CoefficientRing R>
R ring_zero() {
  return R(Rational(0));
}

template <CoefficientRing R>
R ring_pow(const R& base, long exponent) {
  if (exponent < 0) return ring_pow(base.inverse(), -exponent);
  R out = ring_one<R>();
  R b = base;
  while (exponent > 0) {
    if (exponent & 1) out = out * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return out;
}

}  // namespace ellgen
