#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellgen/manifold.hpp"
#include "ellgen/modular_poly.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/series.hpp"
#include "ellgen/trunc_poly.hpp"

namespace ellgen {

// Default truncation: 12 s-units, i.e. q-order 6.
inline constexpr int kDefaultQOrder = 6;

template <CoefficientRing R>
struct GenusSpec {
  std::string name;
  R delta;
  R epsilon;
};

GenusSpec<Rational> signature_spec();  // delta = epsilon = 1
GenusSpec<Rational> ahat_spec();       // delta = -1/8, epsilon = 0
GenusSpec<ModularPoly> generic_spec();
// "signature" | "ahat"; kUnknownName otherwise.
GenusSpec<Rational> rational_spec(const std::string& name);

// g(u) = int_0^u dt / sqrt(1 - 2 delta t^2 + epsilon t^4), known through u^order.
template <CoefficientRing R>
Series<R> genus_log(const GenusSpec<R>& spec, int order) {
  if (order < 1) fail(ErrorCode::kDomain, "genus_log needs order >= 1");
  Series<R> base = Series<R>::constant(order - 1, ring_one<R>());
  if (order - 1 >= 2) base[2] = R(Rational(-2)) * spec.delta;
  if (order - 1 >= 4) base[4] = spec.epsilon;
  return ps_integrate(ps_powhalf(base, Rational(-1, 2)));
}

// Q(x) = x / g^{-1}(x), known through x^order.
template <CoefficientRing R>
Series<R> char_series(const GenusSpec<R>& spec, int order) {
  if (order < 0) fail(ErrorCode::kDomain, "char_series needs order >= 0");
  const Series<R> rev = ps_reversion(genus_log(spec, order + 1));
  Series<R> rev_over_x(order);
  for (int j = 0; j <= order; ++j) rev_over_x[j] = rev[j + 1];
  return ps_inv(rev_over_x);
}

// Smallest x-cap a root function needs so that composing with every root class is exact.
int root_series_cap(const ManifoldModel& m);

// prod_entries f(root)^mult / f(0)^delta as a cohomology class. f is a root-pair
// function: Chern entries use f(x); Pontryagin entries need f even and use f(x) = g(x^2).
template <CoefficientRing S>
TruncPoly<S> multiplicative_class(const ManifoldModel& m, const Series<S>& f) {
  const auto& coh = m.cohomology;
  bool even = true;
  for (int j = 1; j <= f.cap(); j += 2) even = even && f[j].is_zero();
  Series<S> g(f.cap() / 2);
  for (int j = 0; j <= g.cap(); ++j) g[j] = f[2 * j];

  TruncPoly<S> total = coh.template one<S>();
  for (const TangentEntry& e : m.tangent.entries) {
    if (e.mult == 0) continue;
    const TruncPoly<S> root = m.root_class(e).template map_coefficients<S>([](const Rational& c) { return S(c); });
    if (m.tangent.style == TangentStyle::kChern) {
      total = total * ps_compose(ps_pow_int(f, e.mult), root);
    } else {
      if (!even) fail(ErrorCode::kUnsupported, m.name + ": odd root function on Pontryagin-style data");
      total = total * ps_compose(ps_pow_int(g, e.mult), root);
    }
  }
  if (m.tangent.delta != 0) total = ring_pow(f[0], -m.tangent.delta) * total;
  return total;
}

template <CoefficientRing S>
S evaluate_root_function(const ManifoldModel& m, const Series<S>& f) {
  return m.cohomology.evaluate(multiplicative_class(m, f));
}

template <CoefficientRing R>
struct GenusValue {
  R value;
  std::string notice;  // empty unless the dimension forces vanishing
};

template <CoefficientRing R>
GenusValue<R> genus_value(const GenusSpec<R>& spec, const ManifoldModel& m) {
  const Series<R> q = char_series(spec, std::max(root_series_cap(m), 1));
  GenusValue<R> out{evaluate_root_function(m, q), {}};
  if (m.dim_real % 4 != 0) {
    if (!out.value.is_zero()) fail(ErrorCode::kInternalInconsistency, m.name + ": genus nonzero in dimension not divisible by 4");
    out.notice = "genus vanishes in dimensions not divisible by 4";
  }
  return out;
}

// True iff genus_value(generic, CP^{2k}) is the t^{2k} coefficient of (1-2 delta t^2 + epsilon t^4)^{-1/2}, k <= kmax.
bool cp_generating_check(int kmax);

// Verifies two classical identities on a builtin; kInternalInconsistency on failure.
void catalog_self_check(const ManifoldModel& m);

// Twisted bundles as words in Lambda_t / S_t applied to TM.
enum class TwistOp { kLambda, kSym };

// Op_{sign q^n} for n = first, first + step, ...; step 0 means the single factor n = first.
struct TwistFamily {
  TwistOp op;
  int sign = 1;
  int first = 1;
  int step = 0;
};

struct TwistDescriptor {
  std::string name;
  std::vector<TwistFamily> families;
  // For single bundles the word is built in a formal variable t (= q) and the
  // coefficient of t^extract is the bundle.
  std::optional<int> extract;
  // Twist by T^{1,0} instead of the complexified tangent bundle (Chern style only).
  bool holomorphic = false;
};

TwistDescriptor phi0_word();
TwistDescriptor loop_word();
TwistDescriptor tangent_word();                // TM (complexified)
TwistDescriptor lambda2_plus_tangent_word();  // Lambda^2 TM + TM
TwistDescriptor trivial_word();
TwistDescriptor holomorphic_tangent_word();   // T^{1,0}M
TwistDescriptor descriptor_by_name(const std::string& name);

struct IndexSeries {
  QSeriesQ series;
  std::string tag;
  int k = 0;  // dim M = 4k
};

// Root-pair function base(x) * prod twist factors, coefficients known to s-order 2*qorder.
Series<QSeriesQ> twisted_root_function(const std::string& spec_name, const TwistDescriptor& word, int qorder, int cap);

// <base class * ch(word), [M]> as a series in s (t = q for single-bundle words).
IndexSeries twisted_index(const std::string& spec_name, const ManifoldModel& m, const TwistDescriptor& word, int qorder);
// Single-bundle index: the coefficient of t^extract.
Rational twisted_index_coefficient(const std::string& spec_name, const ManifoldModel& m, const TwistDescriptor& word);

// q^{-k/2} A(M, prod_{n odd} Lambda_{-q^n} TM (x) prod_{n even} S_{q^n} TM).
IndexSeries phi0_series(const ManifoldModel& m, int qorder);
// The raw Ahat-word series without the q^{-k/2} prefactor.
IndexSeries raw_ahat_series(const ManifoldModel& m, int qorder);
// sign(M, prod_{n>=1} S_{q^n} TM (x) Lambda_{q^n} TM).
IndexSeries loop_sign_series(const ManifoldModel& m, int qorder);

// Independent route: <Ahat class * ch(E), [M]> with ch built additively.
enum class DirectBundle { kComplexifiedTangent, kHolomorphicTangent };
Rational ahat_twisted_direct(const ManifoldModel& m, DirectBundle bundle);

// Ahat(V_n, T V_n) for V(n,n) by the residue in h, the coefficient in w = e^h - 1,
// and the holomorphic-tangent twisted index. Disagreement is kInternalInconsistency.
struct HypersurfaceIndex {
  Rational residue;
  Rational w_coefficient;
  Rational twisted;
};
HypersurfaceIndex hypersurface_pipelines(int n);
Rational hypersurface_index_closed(int n);

struct PoleOrder {
  bool determinate = false;
  Rational order;  // in q-units; positive means a pole
};
PoleOrder pole_order(const IndexSeries& s);

struct VanishResult {
  bool vanish = false;
  bool indeterminate = false;  // the whole available series is zero
};
// Coefficients of q^{-k/2+j}, j = 0..r, of Phi_0(M) all vanish.
VanishResult leading_vanish_count(const ManifoldModel& m, int r, int qorder = kDefaultQOrder);
// Index j of the first nonzero coefficient q^{-k/2+j} of Phi_0(M), if any within qorder.
std::optional<int> first_nonzero_phi0_index(const ManifoldModel& m, int qorder = kDefaultQOrder);

}  // namespace ellgen
