#include "ellgen/genus.hpp"

#include <regex>

namespace ellgen {

GenusSpec<Rational> signature_spec() { return {"signature", Rational(1), Rational(1)}; }
GenusSpec<Rational> ahat_spec() { return {"ahat", Rational(-1, 8), Rational(0)}; }
GenusSpec<ModularPoly> generic_spec() { return {"generic", ModularPoly::delta(), ModularPoly::epsilon()}; }

GenusSpec<Rational> rational_spec(const std::string& name) {
  if (name == "signature") return signature_spec();
  if (name == "ahat") return ahat_spec();
  fail(ErrorCode::kUnknownName, "unknown genus '" + name + "' (expected signature, ahat or generic)");
}

int root_series_cap(const ManifoldModel& m) {
  int cap = 0;
  for (const TangentEntry& e : m.tangent.entries) {
    const int idx = m.root_class(e).nilpotency_index();
    cap = std::max(cap, m.tangent.style == TangentStyle::kChern ? idx : 2 * idx);
  }
  return cap;
}

bool cp_generating_check(int kmax) {
  if (kmax < 0) fail(ErrorCode::kDomain, "kmax must be non-negative");
  const int cap = std::max(2 * kmax, 4);
  Series<ModularPoly> base = Series<ModularPoly>::constant(cap, ModularPoly(1));
  base[2] = ModularPoly(-2) * ModularPoly::delta();
  base[4] = ModularPoly::epsilon();
  const Series<ModularPoly> gen = ps_powhalf(base, Rational(-1, 2));
  const auto spec = generic_spec();
  for (int k = 0; k <= kmax; ++k) {
    const ManifoldModel m = k == 0 ? builtin("pt") : builtin("CP" + std::to_string(2 * k));
    if (!(genus_value(spec, m).value == gen[2 * k])) return false;
  }
  return true;
}

namespace {

void require(bool ok, const ManifoldModel& m, const std::string& what) {
  if (!ok) fail(ErrorCode::kInternalInconsistency, m.name + ": catalog self-check failed: " + what);
}

Rational first_chern_coefficient(const ManifoldModel& m) {
  return total_chern_class(m).coeff({1});
}

}  // namespace

void catalog_self_check(const ManifoldModel& m) {
  static const std::regex kProjective(R"((CP|HP)(\d+))");
  static const std::regex kHypersurface(R"(V\((\d+),(\d+)\))");
  std::smatch match;
  if (std::regex_match(m.name, match, kProjective)) {
    const int n = std::stoi(match[2].str());
    const Rational sig = genus_value(signature_spec(), m).value;
    if (match[1].str() == "CP") {
      require(euler_characteristic(m) == Rational(n + 1), m, "chi(CPn) = n+1");
      require(first_chern_coefficient(m) == Rational(n + 1), m, "c1 = (n+1)h");
      require(sig == Rational(n % 2 == 0 ? 1 : 0), m, "signature");
    } else {
      require(sig == Rational(n % 2 == 0 ? 1 : 0), m, "signature");
      require(genus_value(ahat_spec(), m).value.is_zero(), m, "Ahat = 0");
    }
  } else if (std::regex_match(m.name, match, kHypersurface)) {
    const long n = std::stol(match[1].str());
    const long l = std::stol(match[2].str());
    require(first_chern_coefficient(m) == Rational(n + 2 - l), m, "c1 = (n+2-l)h");
    const Rational chi = (Rational(1 - l).pow(n + 2) - Rational(1)) / Rational(l) + Rational(n + 2);
    require(euler_characteristic(m) == chi, m, "chi(V) closed form");
  }
}

TwistDescriptor phi0_word() {
  return {"phi0", {{TwistOp::kLambda, -1, 1, 2}, {TwistOp::kSym, 1, 2, 2}}, std::nullopt, false};
}
TwistDescriptor loop_word() {
  return {"loop", {{TwistOp::kSym, 1, 1, 1}, {TwistOp::kLambda, 1, 1, 1}}, std::nullopt, false};
}
TwistDescriptor tangent_word() { return {"tangent", {{TwistOp::kLambda, 1, 1, 0}}, 1, false}; }
TwistDescriptor lambda2_plus_tangent_word() {
  // Coefficient of t^2 in Lambda_t TM (x) S_{t^2} TM.
  return {"lambda2_plus_tangent", {{TwistOp::kLambda, 1, 1, 0}, {TwistOp::kSym, 1, 2, 0}}, 2, false};
}
TwistDescriptor trivial_word() { return {"trivial", {}, std::nullopt, false}; }
TwistDescriptor holomorphic_tangent_word() { return {"holomorphic_tangent", {{TwistOp::kLambda, 1, 1, 0}}, 1, true}; }

TwistDescriptor descriptor_by_name(const std::string& name) {
  for (const auto& d : {phi0_word(), loop_word(), tangent_word(), lambda2_plus_tangent_word(), trivial_word(),
                        holomorphic_tangent_word()}) {
    if (d.name == name) return d;
  }
  fail(ErrorCode::kUnknownName, "unknown twist descriptor '" + name + "'");
}

namespace {

using SeriesQ = Series<QSeriesQ>;

SeriesQ lift(const Series<Rational>& f) {
  return map_coefficients<QSeriesQ>(f, [](const Rational& c) { return QSeriesQ(c); });
}

// 1 + t e^{sign x}
SeriesQ one_plus_t_exp(const QSeriesQ& t, int sign, int cap) {
  SeriesQ out(cap);
  Rational inv_fact(1);
  for (int j = 0; j <= cap; ++j) {
    if (j > 0) inv_fact = inv_fact / Rational(j);
    const Rational c = (sign < 0 && j % 2 == 1) ? -inv_fact : inv_fact;
    out[j] = QSeriesQ(c) * t;
  }
  out[0] = out[0] + QSeriesQ(Rational(1));
  return out;
}

Series<Rational> base_series(const std::string& spec_name, int cap) {
  if (spec_name == "ahat") return char_series(ahat_spec(), cap);
  if (spec_name == "signature") {
    // x / tanh(x/2) = 2 Q_sig(x/2)
    Series<Rational> q = char_series(signature_spec(), cap);
    Rational scale(2);
    for (int j = 0; j <= cap; ++j) {
      q[j] = scale * q[j];
      scale = scale / Rational(2);
    }
    return q;
  }
  fail(ErrorCode::kUnknownName, "twisted indices are defined for signature and ahat, not '" + spec_name + "'");
}

}  // namespace

Series<QSeriesQ> twisted_root_function(const std::string& spec_name, const TwistDescriptor& word, int qorder, int cap) {
  if (qorder < 0) fail(ErrorCode::kDomain, "q-order must be non-negative");
  const int order = 2 * qorder;
  SeriesQ f = lift(base_series(spec_name, cap));
  for (const TwistFamily& fam : word.families) {
    if ((fam.sign != 1 && fam.sign != -1) || fam.first < 1 || fam.step < 0) {
      fail(ErrorCode::kUnsupported, "twist family must have sign +-1, first >= 1, step >= 0");
    }
    for (int n = fam.first; n <= qorder; n += fam.step) {
      const QSeriesQ t = QSeriesQ::monomial(2 * n, Rational(fam.sign), order);
      // Lambda_t: (1 + t e^x)(1 + t e^{-x}); S_t is the inverse of Lambda_{-t}.
      const QSeriesQ tt = fam.op == TwistOp::kLambda ? t : -t;
      SeriesQ factor = one_plus_t_exp(tt, 1, cap);
      if (!word.holomorphic) factor = factor * one_plus_t_exp(tt, -1, cap);
      if (fam.op == TwistOp::kSym) factor = ps_inv(factor);
      f = f * factor;
      if (fam.step == 0) break;
    }
  }
  return f;
}

IndexSeries twisted_index(const std::string& spec_name, const ManifoldModel& m, const TwistDescriptor& word, int qorder) {
  if (word.holomorphic && m.tangent.style != TangentStyle::kChern) {
    fail(ErrorCode::kUnsupported, m.name + ": holomorphic twists need Chern-style tangent data");
  }
  const SeriesQ f = twisted_root_function(spec_name, word, qorder, root_series_cap(m));
  const QSeriesQ value = evaluate_root_function(m, f).truncated(2 * qorder);
  return {value, spec_name + ":" + word.name, m.quarter_dimension()};
}

Rational twisted_index_coefficient(const std::string& spec_name, const ManifoldModel& m, const TwistDescriptor& word) {
  if (!word.extract) fail(ErrorCode::kUnsupported, "descriptor '" + word.name + "' is not a single bundle");
  return twisted_index(spec_name, m, word, *word.extract).series.q_coeff(*word.extract);
}

IndexSeries raw_ahat_series(const ManifoldModel& m, int qorder) {
  if (m.dim_real % 4 != 0) return {QSeriesQ::zero(2 * qorder), "raw_ahat", -1};
  IndexSeries s = twisted_index("ahat", m, phi0_word(), qorder);
  s.tag = "raw_ahat";
  return s;
}

IndexSeries phi0_series(const ManifoldModel& m, int qorder) {
  IndexSeries s = raw_ahat_series(m, qorder);
  s.tag = "phi0";
  if (s.k > 0) s.series = s.series.shifted(-s.k);
  return s;
}

IndexSeries loop_sign_series(const ManifoldModel& m, int qorder) {
  if (m.dim_real % 4 != 0) return {QSeriesQ::zero(2 * qorder), "loop_sign", -1};
  IndexSeries s = twisted_index("signature", m, loop_word(), qorder);
  s.tag = "loop_sign";
  return s;
}

Rational ahat_twisted_direct(const ManifoldModel& m, DirectBundle bundle) {
  const int cap = std::max(root_series_cap(m), 1);
  const TruncPoly<Rational> ahat = multiplicative_class(m, char_series(ahat_spec(), cap));
  const auto& coh = m.cohomology;
  TruncPoly<Rational> ch(coh.variables());
  if (bundle == DirectBundle::kHolomorphicTangent) {
    if (m.tangent.style != TangentStyle::kChern) fail(ErrorCode::kUnsupported, m.name + ": T^{1,0} needs Chern-style data");
    for (const TangentEntry& e : m.tangent.entries) ch += Rational(e.mult) * ps_exp(m.root_class(e));
    ch -= Rational(m.tangent.delta) * coh.one<Rational>();
  } else {
    // e^x + e^{-x} = sum 2 x^{2j} / (2j)!
    const Series<Rational> two_cosh = exp_series(cap) + exp_series(cap, Rational(-1));
    Series<Rational> even_part(cap / 2);
    for (int j = 0; j <= even_part.cap(); ++j) even_part[j] = two_cosh[2 * j];
    for (const TangentEntry& e : m.tangent.entries) {
      const TruncPoly<Rational> root = m.root_class(e);
      const bool chern = m.tangent.style == TangentStyle::kChern;
      ch += Rational(e.mult) * ps_compose(chern ? two_cosh : even_part, root);
    }
    ch -= Rational(2 * m.tangent.delta) * coh.one<Rational>();
  }
  return coh.evaluate(ahat * ch);
}

HypersurfaceIndex hypersurface_pipelines(int n) {
  if (n < 2 || n % 2 != 0) fail(ErrorCode::kDomain, "hypersurface pipelines need even n >= 2");
  const long l = n;
  HypersurfaceIndex out;

  // (a) l * [h^n] (h/(e^{h/2}-e^{-h/2}))^{n+2} (e^{lh/2}-e^{-lh/2})/(lh) ((n+2)e^h - e^{lh})
  {
    auto sinh_over = [n](const Rational& scale) {
      // (e^{ah/2} - e^{-ah/2}) / (ah) = sum (a h / 2)^{2j} / (2j+1)!
      Series<Rational> s(n);
      for (int j = 0; 2 * j <= n; ++j) s[2 * j] = (scale / Rational(2)).pow(2 * j) / factorial(2 * j + 1);
      return s;
    };
    const Series<Rational> a = ps_pow_int(sinh_over(Rational(1)), -(n + 2)) * sinh_over(Rational(l)) *
                               (Rational(n + 2) * exp_series(n) - exp_series(n, Rational(l)));
    out.residue = Rational(l) * a[n];
  }
  // (b) [w^{n+1}] (1+w)^{(n-l)/2} ((1+w)^l - 1) ((n+2)(1+w) - (1+w)^l)
  {
    const int cap = n + 1;
    const Series<Rational> one_w(cap, {Rational(1), Rational(1)});
    const Series<Rational> one = Series<Rational>::constant(cap, Rational(1));
    const Series<Rational> pl = ps_pow_int(one_w, l);
    const Series<Rational> b = ps_pow(one_w, Rational(n - l, 2)) * (pl - one) * (Rational(n + 2) * one_w - pl);
    out.w_coefficient = b[cap];
  }
  // (c) the twisted index on the model
  out.twisted = twisted_index_coefficient("ahat", builtin("V(" + std::to_string(n) + "," + std::to_string(n) + ")"),
                                          holomorphic_tangent_word());
  return out;
}

Rational hypersurface_index_closed(int n) {
  const HypersurfaceIndex h = hypersurface_pipelines(n);
  if (!(h.residue == h.w_coefficient) || !(h.residue == h.twisted)) {
    fail(ErrorCode::kInternalInconsistency, "hypersurface pipelines disagree: residue " + h.residue.to_string() +
                                                ", w-coefficient " + h.w_coefficient.to_string() + ", twisted " +
                                                h.twisted.to_string());
  }
  return h.residue;
}

PoleOrder pole_order(const IndexSeries& s) {
  if (s.series.is_zero()) return {false, Rational(0)};
  return {true, Rational(-s.series.valuation(), 2)};
}

VanishResult leading_vanish_count(const ManifoldModel& m, int r, int qorder) {
  if (r < 0) fail(ErrorCode::kDomain, "r must be non-negative");
  if (qorder < r) fail(ErrorCode::kDomain, "q-order " + std::to_string(qorder) + " too small for r = " + std::to_string(r));
  const IndexSeries phi = phi0_series(m, qorder);
  if (phi.k < 0) return {true, true};
  VanishResult out;
  out.vanish = true;
  for (int j = 0; j <= r; ++j) out.vanish = out.vanish && phi.series.coeff(-phi.k + 2 * j).is_zero();
  out.indeterminate = out.vanish && phi.series.is_zero();
  return out;
}

std::optional<int> first_nonzero_phi0_index(const ManifoldModel& m, int qorder) {
  const IndexSeries phi = phi0_series(m, qorder);
  if (phi.k < 0 || phi.series.is_zero()) return std::nullopt;
  return (phi.series.valuation() + phi.k) / 2;
}

}  // namespace ellgen
