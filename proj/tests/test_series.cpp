#include "doctest.h"

#include "ellgen/modular_poly.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/series.hpp"
#include "ellgen/trunc_poly.hpp"
#include "test_support.hpp"

using namespace ellgen;

namespace {

using SQ = Series<Rational>;
using SM = Series<ModularPoly>;

SQ poly(int cap, std::vector<long> c) {
  std::vector<Rational> r(c.begin(), c.end());
  return SQ(cap, r);
}

// Oracle: dense polynomial product without truncation, then cut.
std::vector<Rational> naive_product(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("rational canonical form and formatting") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational::parse(" -10/4 ") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
  CHECK(factorial(5) == Rational(120));
  GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1) - i) / (GaussianRational(1) + i) == -i);
  CHECK((Rational(2) + Rational(1, 3) * i).to_string() == "2+1/3*i");
}

TEST_CASE("series arithmetic examples") {
  CHECK(poly(1, {1, 1}) * poly(1, {1, -1}) == SQ::constant(1, Rational(1)));

  // (1+h)^6 (1+4h)^{-1}: h^2 coefficient 15 - 24 + 16 = 7.
  SQ c = ps_pow_int(poly(2, {1, 1}), 6) * ps_inv(poly(2, {1, 4}));
  CHECK(c[0] == Rational(1));
  CHECK(c[1] == Rational(2));
  CHECK(c[2] == Rational(7));
  // Oracle: brute-force binomial expansion times the geometric series.
  std::vector<Rational> a{1, 6, 15}, g{1, -4, 16};
  CHECK(naive_product(a, g)[2] == c[2]);

  CHECK(ps_inv(poly(3, {1, -1})) == poly(3, {1, 1, 1, 1}));
  CHECK(ps_inv(poly(2, {1, 4})) == poly(2, {1, -4, 16}));
  CHECK(ps_inv(poly(2, {1, 4})) * poly(2, {1, 4}) == SQ::constant(2, Rational(1)));
  CHECK_THROWS_AS(ps_inv(poly(2, {0, 1})), Error);
  CHECK_THROWS_AS(poly(2, {1}) * poly(3, {1}), Error);
}

TEST_CASE("half-integer powers") {
  CHECK(ps_powhalf(poly(3, {1, -4}), Rational(-1, 2)) == poly(3, {1, 2, 6, 20}));
  for (int n = 0; n <= 3; ++n) {
    // central binomial oracle
    CHECK(ps_powhalf(poly(3, {1, -4}), Rational(-1, 2))[n] == binomial(Rational(2 * n), n));
  }
  CHECK(ps_powhalf(SQ::constant(4, Rational(1)), Rational(1, 2)) == SQ::constant(4, Rational(1)));
  CHECK(ps_powhalf(poly(2, {4, 4, 1}), Rational(1, 2)) == poly(2, {2, 1}));
  CHECK_THROWS_AS(ps_powhalf(poly(2, {2, 1}), Rational(1, 2)), Error);

  const ModularPoly d = ModularPoly::delta(), e = ModularPoly::epsilon();
  SM base(4);
  base[0] = 1;
  base[2] = ModularPoly(-2) * d;
  base[4] = e;
  SM r = ps_powhalf(base, Rational(-1, 2));
  CHECK(r[0] == ModularPoly(1));
  CHECK(r[1].is_zero());
  CHECK(r[2] == d);
  CHECK(r[4] == ModularPoly(Rational(3, 2)) * d * d - ModularPoly(Rational(1, 2)) * e);
  CHECK(r[4].to_string() == "3/2*delta^2 - 1/2*epsilon");

  SM g = ps_integrate(r);
  CHECK(g[1] == ModularPoly(1));
  CHECK(g[3] == ModularPoly(Rational(1, 3)) * d);
  CHECK(g[5] == ModularPoly(Rational(3, 10)) * d * d - ModularPoly(Rational(1, 10)) * e);
}

TEST_CASE("exp, compose, reversion") {
  CHECK(exp_series(2) == SQ(2, {1, 1, Rational(1, 2)}));
  // 1/(1+w) at w = e^h - 1 is e^{-h}.
  SQ w = exp_series(2) - SQ::constant(2, Rational(1));
  CHECK(ps_compose(ps_inv(poly(2, {1, 1})), w) == exp_series(2, Rational(-1)));
  CHECK(ps_compose(poly(3, {5, 1, 2, 3}), SQ(3)) == SQ::constant(3, Rational(5)));

  CHECK(ps_reversion(SQ::variable(5)) == SQ::variable(5));
  SQ g = poly(5, {0, 1, 0, 1});
  SQ h = ps_reversion(g);
  CHECK(h == poly(5, {0, 1, 0, -1, 0, 3}));
  CHECK(ps_compose(g, h) == SQ::variable(5));
  CHECK_THROWS_AS(ps_reversion(poly(3, {0, 2})), Error);

  CHECK(ps_integrate(SQ::constant(0, Rational(1))) == SQ::variable(1));
  CHECK(ps_coeff(ps_pow_int(poly(2, {1, 1}), 3), 2) == Rational(3));

  TruncPoly<Rational> x = TruncPoly<Rational>::variable({{"h", 2}}, 0);
  TruncPoly<Rational> ex = ps_exp(x);
  CHECK(ex.coeff({2}) == Rational(1, 2));
  CHECK_THROWS_AS(ps_exp(ex), Error);
}

TEST_CASE("q-series with half-integer grading") {
  QSeriesQ one_plus_q = QSeriesQ::from_coefficients(0, {1, 0, 1}, 4);
  QSeriesQ sq = one_plus_q * one_plus_q;
  CHECK(sq.q_coeff(0) == Rational(1));
  CHECK(sq.q_coeff(1) == Rational(2));
  CHECK(sq.q_coeff(2) == Rational(1));
  CHECK(sq.order() == 4);
  CHECK_THROWS_AS(sq.coeff(5), Error);

  // s^{-1}(1 + s) has inverse s (1 - s + s^2 ...) known through order - 2v.
  QSeriesQ a = QSeriesQ::from_coefficients(-1, {1, 1}, 6);
  QSeriesQ prod = a * a.inverse();
  CHECK(prod.agrees_with(QSeriesQ(Rational(1)), prod.order()));
  CHECK(a.inverse().order() == 8);
  CHECK_THROWS_AS(QSeriesQ::from_coefficients(0, {1, 1}, QSeriesQ::kExact).inverse(), Error);
  CHECK(QSeriesQ(Rational(2)).inverse() == QSeriesQ(Rational(1, 2)));
}

TEST_CASE("property: ring laws on truncated polynomials") {
  test_support::Rng rng(11);
  const std::vector<Variable> vars{{"a", 3}, {"b", 2}};
  for (int trial = 0; trial < 60; ++trial) {
    auto a = test_support::random_trunc_poly(rng, vars, 5);
    auto b = test_support::random_trunc_poly(rng, vars, 5);
    auto c = test_support::random_trunc_poly(rng, vars, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("property: inverse and half-power round trips") {
  test_support::Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int cap = 1 + static_cast<int>(rng.uniform(0, 7));
    SQ a = test_support::random_series(rng, cap, 4);
    a[0] = Rational(1);
    CHECK(a * ps_inv(a) == SQ::constant(cap, Rational(1)));
    SQ r = ps_powhalf(a, Rational(-1, 2));
    CHECK(r * r * a == SQ::constant(cap, Rational(1)));
    SQ s = ps_powhalf(a, Rational(3, 2));
    CHECK(s * s == ps_pow_int(a, 3));
  }
}

TEST_CASE("property: reversion round trip and parity") {
  test_support::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int cap = 3 + static_cast<int>(rng.uniform(0, 5));
    SQ g = test_support::random_series(rng, cap, 3);
    g[0] = 0;
    g[1] = 1;
    SQ h = ps_reversion(g);
    CHECK(ps_compose(g, h) == SQ::variable(cap));
    SQ odd = g;
    for (int j = 0; j <= cap; j += 2) odd[j] = 0;
    SQ ho = ps_reversion(odd);
    for (int j = 0; j <= cap; j += 2) CHECK(ho[j].is_zero());
  }
}

TEST_CASE("property: q-series multiplication commutes with the q -> s^2 embedding") {
  test_support::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    SQ a = test_support::random_series(rng, 5, 4);
    SQ b = test_support::random_series(rng, 5, 4);
    // The product may be known beyond the dense cap when both valuations are positive.
    CHECK(QSeriesQ::from_q_series(a * b).agrees_with(QSeriesQ::from_q_series(a) * QSeriesQ::from_q_series(b), 10));
  }
}
