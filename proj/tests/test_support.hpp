#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ellgen/rational.hpp"
#include "ellgen/series.hpp"
#include "ellgen/trunc_poly.hpp"

// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.
namespace test_support {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin() { return uniform(0, 1) == 1; }
  ellgen::Rational rational(long bound) {
    return ellgen::Rational(uniform(-bound, bound), uniform(1, bound));
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline ellgen::Series<ellgen::Rational> random_series(Rng& rng, int cap, long bound) {
  ellgen::Series<ellgen::Rational> s(cap);
  for (int j = 0; j <= cap; ++j) s[j] = rng.coin() ? rng.rational(bound) : ellgen::Rational(0);
  return s;
}

inline ellgen::TruncPoly<ellgen::Rational> random_trunc_poly(Rng& rng, const std::vector<ellgen::Variable>& vars, int terms) {
  ellgen::TruncPoly<ellgen::Rational> p(vars);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e;
    for (const auto& v : vars) e.push_back(static_cast<int>(rng.uniform(0, v.cap)));
    p.add_term(e, rng.rational(5));
  }
  return p;
}

}  // namespace test_support
