#include "doctest.h"

#include "ellgen/genus.hpp"
#include "test_support.hpp"

using namespace ellgen;

namespace {

using SQ = Series<Rational>;

ModularPoly delta() { return ModularPoly::delta(); }
ModularPoly eps() { return ModularPoly::epsilon(); }

// Oracle: (x/2)/sinh(x/2) from the exponential series, independent of reversion.
SQ ahat_closed(int cap) {
  SQ sinh_over(cap);
  const SQ e = exp_series(cap + 1, Rational(1, 2)) - exp_series(cap + 1, Rational(-1, 2));
  for (int j = 0; j <= cap; ++j) sinh_over[j] = e[j + 1];  // (e^{x/2} - e^{-x/2}) / x
  return ps_inv(sinh_over);
}

// Oracle: x cosh x / sinh x.
SQ xcoth_closed(int cap) {
  const SQ ep = exp_series(cap + 1), em = exp_series(cap + 1, Rational(-1));
  SQ cosh(cap), sinh_over(cap);
  for (int j = 0; j <= cap; ++j) {
    cosh[j] = (ep[j] + em[j]) / Rational(2);
    sinh_over[j] = (ep[j + 1] - em[j + 1]) / Rational(2);
  }
  return cosh * ps_inv(sinh_over);
}

}  // namespace

TEST_CASE("genus logarithm") {
  const auto g = genus_log(generic_spec(), 6);
  CHECK(g[1] == ModularPoly(1));
  CHECK(g[3] == ModularPoly(Rational(1, 3)) * delta());
  CHECK(g[5] == ModularPoly(Rational(3, 10)) * delta() * delta() - ModularPoly(Rational(1, 10)) * eps());
  for (int j = 0; j <= 6; j += 2) CHECK(g[j].is_zero());

  const SQ sig = genus_log(signature_spec(), 7);
  for (int j = 1; j <= 7; j += 2) CHECK(sig[j] == Rational(1, j));

  const SQ ahat_deriv = ps_derivative(genus_log(ahat_spec(), 7));
  CHECK(ahat_deriv == ps_powhalf(SQ(6, {1, 0, Rational(1, 4)}), Rational(-1, 2)));
}

TEST_CASE("characteristic series against closed hyperbolic forms") {
  const SQ qa = char_series(ahat_spec(), 10);
  CHECK(qa == ahat_closed(10));
  CHECK(qa[2] == Rational(-1, 24));
  CHECK(qa[4] == Rational(7, 5760));
  const SQ qs = char_series(signature_spec(), 10);
  CHECK(qs == xcoth_closed(10));
  CHECK(qs[2] == Rational(1, 3));
  CHECK(qs[4] == Rational(-1, 45));
  const auto qg = char_series(generic_spec(), 9);
  for (int j = 1; j <= 9; j += 2) CHECK(qg[j].is_zero());
}

TEST_CASE("genus values on the catalog") {
  CHECK(genus_value(generic_spec(), builtin("CP2")).value == delta());
  CHECK(genus_value(generic_spec(), builtin("HP2")).value == eps());
  CHECK(genus_value(generic_spec(), builtin("CP4")).value ==
        ModularPoly(Rational(3, 2)) * delta() * delta() - ModularPoly(Rational(1, 2)) * eps());
  const auto cp3 = genus_value(ahat_spec(), builtin("CP3"));
  CHECK(cp3.value.is_zero());
  CHECK(!cp3.notice.empty());
  CHECK(genus_value(generic_spec(), builtin("pt")).value == ModularPoly(1));
  CHECK(cp_generating_check(0));
  CHECK(cp_generating_check(4));
}

TEST_CASE("property: multiplicativity, grading and specialization") {
  const std::vector<std::string> names{"CP2", "CP4", "HP2", "V(4,4)", "HP1", "CP1"};
  const auto gen = generic_spec();
  for (const auto& a : names) {
    const ManifoldModel ma = builtin(a);
    const ModularPoly va = genus_value(gen, ma).value;
    if (ma.dim_real % 4 == 0) CHECK(va.is_homogeneous(ma.dim_real / 2));
    CHECK(va.evaluate(Rational(1), Rational(1)) == genus_value(signature_spec(), ma).value);
    CHECK(va.evaluate(Rational(-1, 8), Rational(0)) == genus_value(ahat_spec(), ma).value);
    for (const auto& b : names) {
      if (a > b) continue;
      const ManifoldModel mab = product({ma, builtin(b)});
      CHECK(genus_value(gen, mab).value == va * genus_value(gen, builtin(b)).value);
    }
  }
}

TEST_CASE("twisted indices: examples") {
  const ManifoldModel cp2 = builtin("CP2");
  CHECK(twisted_index("ahat", cp2, trivial_word(), 0).series.coeff(0) == Rational(-1, 8));
  CHECK(twisted_index("signature", cp2, trivial_word(), 0).series.coeff(0) == Rational(1));
  CHECK(loop_sign_series(cp2, 2).series.coeff(0) == Rational(1));

  const ManifoldModel hp2 = builtin("HP2");
  const IndexSeries phi = phi0_series(hp2, 4);
  CHECK(phi.series.coeff(-2).is_zero());
  const Rational a_tm = twisted_index_coefficient("ahat", hp2, tangent_word());
  CHECK(!a_tm.is_zero());
  CHECK(phi.series.coeff(0) == -a_tm);
  CHECK(a_tm == ahat_twisted_direct(hp2, DirectBundle::kComplexifiedTangent));

  CHECK_THROWS_AS(twisted_index("ahat", hp2, holomorphic_tangent_word(), 1), Error);
  CHECK_THROWS_AS(twisted_index("todd", cp2, trivial_word(), 1), Error);
  CHECK_THROWS_AS(descriptor_by_name("nope"), Error);
}

TEST_CASE("loop series of a product is the product of loop series") {
  const ManifoldModel cp2 = builtin("CP2");
  const QSeriesQ a = loop_sign_series(cp2, 4).series;
  const QSeriesQ ab = loop_sign_series(builtin("CP2 x CP2"), 4).series;
  CHECK(ab.agrees_with(a * a, 8));
  const QSeriesQ p = phi0_series(builtin("HP2 x CP2"), 4).series;
  CHECK(p.agrees_with(phi0_series(builtin("HP2"), 4).series * phi0_series(cp2, 4).series, p.order()));
}

TEST_CASE("delta correction: CP1 x CP1 with and without trivial summands") {
  ManifoldModel reduced = builtin("CP1 x CP1");
  reduced.tangent = {TangentStyle::kChern, 0, {{{{"h_1", Rational(2)}}, 1, false}, {{{"h_2", Rational(2)}}, 1, false}}};
  reduced.validate();
  const ManifoldModel virt = builtin("CP1 x CP1");
  for (const auto& word : {phi0_word(), loop_word(), trivial_word()}) {
    for (const std::string spec : {"ahat", "signature"}) {
      CHECK(twisted_index(spec, virt, word, 4).series == twisted_index(spec, reduced, word, 4).series);
    }
  }
  for (const auto& word : {tangent_word(), lambda2_plus_tangent_word(), holomorphic_tangent_word()}) {
    CHECK(twisted_index_coefficient("ahat", virt, word) == twisted_index_coefficient("ahat", reduced, word));
  }
}

TEST_CASE("cusp words: exponent lattices, integrality on spin models") {
  for (const auto& name : builtin_catalog()) {
    const ManifoldModel m = builtin(name);
    if (m.dim_real % 4 != 0) continue;
    const int k = m.dim_real / 4;
    const QSeriesQ phi = phi0_series(m, 4).series;
    const QSeriesQ loop = loop_sign_series(m, 4).series;
    for (int e = -k; e <= phi.order(); ++e) {
      if ((e + k) % 2 != 0) CHECK(phi.coeff(e).is_zero());
      if (m.spin) CHECK(phi.coeff(e).is_integer());
    }
    for (int e = 0; e <= loop.order(); ++e) {
      if (e % 2 != 0) CHECK(loop.coeff(e).is_zero());
      CHECK(loop.coeff(e).is_integer());
    }
    CHECK(loop.coeff(0) == genus_value(signature_spec(), m).value);
    CHECK(phi.coeff(-k) == genus_value(ahat_spec(), m).value);
  }
}

TEST_CASE("hypersurface pipelines and the closed form") {
  for (int n : {4, 6, 8}) {
    const Rational closed = Rational(n + 2) - binomial(Rational(2 * n), n + 1);
    CHECK(hypersurface_index_closed(n) == closed);
  }
  CHECK(hypersurface_index_closed(4) == Rational(-50));
  CHECK(hypersurface_index_closed(6) == Rational(-784));
  CHECK(hypersurface_index_closed(2) == Rational(0));
  CHECK_THROWS_AS(hypersurface_index_closed(3), Error);

  // The complexified tangent bundle is T^{1,0} plus its conjugate; on these spin
  // models both halves contribute equally.
  for (int n : {4, 6}) {
    const ManifoldModel v = builtin("V(" + std::to_string(n) + "," + std::to_string(n) + ")");
    const Rational holo = ahat_twisted_direct(v, DirectBundle::kHolomorphicTangent);
    CHECK(holo == hypersurface_index_closed(n));
    CHECK(ahat_twisted_direct(v, DirectBundle::kComplexifiedTangent) == Rational(2) * holo);
    CHECK(twisted_index_coefficient("ahat", v, tangent_word()) == Rational(2) * holo);
  }
}

TEST_CASE("pole order and leading vanishing") {
  const ManifoldModel v4 = builtin("V(4,4)");
  const PoleOrder po = pole_order(phi0_series(v4, 3));
  CHECK(po.determinate);
  CHECK(po.order == Rational(0));
  CHECK(genus_value(ahat_spec(), v4).value.is_zero());

  const ManifoldModel hp2 = builtin("HP2");
  CHECK(leading_vanish_count(hp2, 0).vanish);
  CHECK(!leading_vanish_count(hp2, 1).vanish);
  CHECK(first_nonzero_phi0_index(hp2) == 1);

  const VanishResult hp1 = leading_vanish_count(builtin("HP1"), 2);
  CHECK(hp1.vanish);
  CHECK(hp1.indeterminate);
  CHECK(!pole_order(phi0_series(builtin("HP1"), 3)).determinate);
  CHECK(pole_order(phi0_series(builtin("CP2"), 3)).order == Rational(1, 2));
}
