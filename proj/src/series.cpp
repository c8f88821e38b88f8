#include "ellgen/series.hpp"

namespace ellgen {

Series<Rational> exp_series(int cap, const Rational& scale) {
  Series<Rational> out(cap);
  Rational term(1);
  for (int j = 0; j <= cap; ++j) {
    out[j] = term;
    term = term * scale / Rational(j + 1);
  }
  return out;
}

}  // namespace ellgen
