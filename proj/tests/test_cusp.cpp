#include "doctest.h"

#include "ellgen/cusp.hpp"

using namespace ellgen;

TEST_CASE("generator expansions at both cusps") {
  const CuspExpansion sig = generator_expansions(Cusp::kSignature, 4);
  CHECK(sig.delta.coeff(0) == Rational(1));
  CHECK(sig.epsilon.coeff(0) == Rational(1));
  const CuspExpansion ah = generator_expansions(Cusp::kAhat, 4);
  CHECK(ah.delta.coeff(0) == Rational(-1, 8));
  CHECK(ah.epsilon.coeff(0).is_zero());
  CHECK(ah.epsilon.coeff(1).is_zero());
  CHECK(!ah.epsilon.coeff(2).is_zero());
  CHECK_THROWS_AS(generator_expansions(Cusp::kAhat, 1), Error);
  CHECK(cusp_from_name("ahat") == Cusp::kAhat);
  CHECK_THROWS_AS(cusp_from_name("theta"), Error);
}

TEST_CASE("modularity across the catalog in both cusps") {
  for (const std::string name : {"CP2", "CP4", "CP6", "HP2", "HP3", "V(4,4)", "CP2 x CP2", "HP2 x CP2"}) {
    for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
      INFO(name << " " << cusp_name(c));
      const ModularityReport r = modularity_report(builtin(name), c, 4);
      CHECK(r.holds);
    }
  }
}

TEST_CASE("property: cusp series are multiplicative") {
  const std::vector<std::string> names{"CP2", "HP1", "HP2", "CP1 x CP1"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      const ManifoldModel ma = builtin(a), mb = builtin(b);
      for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
        const QSeriesQ ab = cusp_series(product({ma, mb}), c, 3).series;
        const QSeriesQ prod = cusp_series(ma, c, 3).series * cusp_series(mb, c, 3).series;
        CHECK(ab.agrees_with(prod, std::min(ab.order(), prod.order())));
      }
    }
  }
}

TEST_CASE("normalized genus") {
  const NormalizedPhi hp2 = normalized_phi(builtin("HP2"), Cusp::kSignature, 6);
  CHECK(hp2.value == QSeriesQ(Rational(1)).truncated(12));
  CHECK(!hp2.squared);
  CHECK(normalized_phi(builtin("HP2 x HP2"), Cusp::kSignature, 4).value.agrees_with(QSeriesQ(Rational(1)), 8));
  CHECK(normalized_phi(builtin("pt"), Cusp::kSignature, 4).value.agrees_with(QSeriesQ(Rational(1)), 8));
  const NormalizedPhi hp1 = normalized_phi(builtin("HP1"), Cusp::kSignature, 4);
  CHECK(hp1.squared);
  CHECK(hp1.value.agrees_with(QSeriesQ::zero(QSeriesQ::kExact), 8));
  CHECK_THROWS_AS(normalized_phi(builtin("CP1"), Cusp::kSignature, 4), Error);
}

TEST_CASE("self-intersection scenario on HP2") {
  // HP1 in HP2 is Poincare dual to u; its self-intersection is a single point.
  const ManifoldModel hp2 = builtin("HP2");
  const auto u = TruncPoly<Rational>::variable(hp2.cohomology.variables(), 0);
  const Rational count = self_intersection_count(hp2, u);
  CHECK(count == Rational(1));
  const NormalizedPhi lhs = normalized_phi(hp2, Cusp::kSignature, 6);
  CHECK(self_intersection_compare(lhs, normalized_points(count, 6)));
  CHECK(!self_intersection_compare(normalized_phi(builtin("CP2 x CP2"), Cusp::kSignature, 4), normalized_points(count, 4)));
  CHECK(self_intersection_compare(lhs, lhs));
}

TEST_CASE("generator independence by rank per weight") {
  for (Cusp c : {Cusp::kSignature, Cusp::kAhat}) {
    const IndependenceReport r = generator_independence(c, 6, 12);
    CHECK(r.independent);
    CHECK(r.weights.size() == 6);
  }
  CHECK(rational_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(rational_rank({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == 2);
}
