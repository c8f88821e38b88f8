#pragma once

#include <string>
#include <vector>

#include "ellgen/genus.hpp"
#include "ellgen/json_io.hpp"

namespace ellgen {

// A normal line bundle of a fixed component with rotation weight w.
struct NormalEntry {
  LinearForm chern;
  int weight = 0;
  friend bool operator==(const NormalEntry&, const NormalEntry&) = default;
};

struct FixedComponent {
  ManifoldModel model;  // "pt" for isolated points
  std::vector<NormalEntry> normal;
  friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

enum class ActionParity { kEven, kOdd, kMixed };
const char* parity_name(ActionParity p);

struct CircleActionData {
  std::string name;
  ManifoldModel ambient;
  std::vector<FixedComponent> components;
  std::string provenance;

  // Dimension count per component, nonzero weights, chern forms over the component's generators.
  void validate() const;
  std::vector<int> weights() const;
  friend bool operator==(const CircleActionData& a, const CircleActionData& b) {
    return a.name == b.name && a.ambient == b.ambient && a.components == b.components;
  }
};

// CPn_linear(m0,...,mn), HPn_diagonal(a0,...,an), trivial(<builtin>), and products "A x B".
CircleActionData builtin_action(const std::string& name);
std::vector<std::string> builtin_action_catalog();

// Codimension of the sigma-fixed component through F is 2 #{odd weights}; the action is
// even when all of them are divisible by 4 and odd when all are 2 mod 4.
ActionParity action_parity(const CircleActionData& a);

// "2", "-1/3", "i", "1-2*i", ...
GaussianRational parse_sample(const std::string& text);
// lambda != 0 and lambda^w != 1 for every weight w.
bool admissible(const CircleActionData& a, const GaussianRational& lambda);

template <CoefficientRing K>
QSeries<K> lift_series(const QSeriesQ& s) {
  std::vector<K> coeffs;
  for (const Rational& c : s.stored()) coeffs.push_back(K(c));
  return QSeries<K>::from_coefficients(s.lowest_stored(), std::move(coeffs), s.order());
}

// Normal factor of a line with class y rotated by mu = lambda^w, as a series in y:
// (1 + mu^{-1} e^{-y}) / (1 - mu^{-1} e^{-y})
//   * prod_{n<=qorder} (1 + q^n mu e^y)(1 + q^n mu^{-1} e^{-y}) / ((1 - q^n mu e^y)(1 - q^n mu^{-1} e^{-y})).
template <CoefficientRing K>
Series<QSeries<K>> normal_factor(const K& mu, int qorder, int cap) {
  using QK = QSeries<K>;
  const int order = 2 * qorder;
  const K a = mu.inverse();
  const K one = ring_one<K>();
  if ((one - a).is_zero()) fail(ErrorCode::kAdmissibility, "sample point is not admissible: lambda^w = 1");
  Series<QK> ey(cap), eminus(cap);
  const Series<Rational> ep = exp_series(cap), em = exp_series(cap, Rational(-1));
  for (int j = 0; j <= cap; ++j) {
    ey[j] = QK(K(ep[j]));
    eminus[j] = QK(K(em[j]));
  }
  const Series<QK> one_s = Series<QK>::constant(cap, QK(one));
  const Series<QK> x0 = QK(a) * eminus;
  Series<QK> f = (one_s + x0) * ps_inv(one_s - x0);
  for (int n = 1; n <= qorder; ++n) {
    const Series<QK> u = QK::monomial(2 * n, mu, order) * ey;
    const Series<QK> v = QK::monomial(2 * n, a, order) * eminus;
    f = f * (one_s + u) * (one_s + v) * ps_inv((one_s - u) * (one_s - v));
  }
  return f;
}

// < T(tangent roots) * prod N(normal entries), [F] > at the sample lambda.
template <CoefficientRing K>
QSeries<K> local_term(const FixedComponent& c, const K& lambda, int qorder) {
  using QK = QSeries<K>;
  if (lambda.is_zero()) fail(ErrorCode::kAdmissibility, "sample point lambda = 0 is not admissible");
  const ManifoldModel& m = c.model;
  const int cap = std::max(root_series_cap(m), 1);
  const Series<QSeriesQ> t = twisted_root_function("signature", loop_word(), qorder, cap);
  const Series<QK> tk = map_coefficients<QK>(t, [](const QSeriesQ& s) { return lift_series<K>(s); });
  TruncPoly<QK> total = multiplicative_class(m, tk);
  for (const NormalEntry& e : c.normal) {
    const Series<QK> nf = normal_factor<K>(ring_pow(lambda, e.weight), qorder, cap);
    total = total * ps_compose(nf, m.cohomology.template form<QK>(e.chern));
  }
  return m.cohomology.evaluate(total).truncated(2 * qorder);
}

template <CoefficientRing K>
QSeries<K> equivariant_series(const CircleActionData& a, const K& lambda, int qorder) {
  QSeries<K> sum = QSeries<K>::zero(QSeries<K>::kExact);
  for (const FixedComponent& c : a.components) sum = sum + local_term<K>(c, lambda, qorder);
  return sum.truncated(2 * qorder);
}

// Rational samples are evaluated over Q, others over Q(i).
QSeriesQi equivariant_series_at(const CircleActionData& a, const GaussianRational& lambda, int qorder);

struct RigidityReport {
  std::vector<GaussianRational> samples;
  std::vector<QSeriesQi> values;
  QSeriesQi nonequivariant;
  bool spin = false;
  bool constant = false;        // all samples agree
  bool matches_direct = false;  // and agree with loop_sign_series of the ambient
  bool q0_constant = false;     // the equivariant signature agrees across samples
  std::string status;           // PASS | FAIL | OBSERVED (non-spin, disagreement recorded)
};
RigidityReport rigidity_check(const CircleActionData& a, const std::vector<GaussianRational>& samples, int qorder);

struct EulerCheck {
  bool holds = false;
  bool partial = false;  // ambient Euler number read off cohomology ranks
  Rational fixed;
  Rational ambient;
};
EulerCheck euler_fixed_check(const CircleActionData& a);

// The N_X pair with y2 = -y1 at lambda = i on a model with one degree-2 generator,
// returned as the evaluated class (constant when the pair is -1).
TruncPoly<QSeriesQi> nx_pair_at_i(int qorder, int cap);

Json action_to_json(const CircleActionData& a);
CircleActionData action_from_json(const Json& j);
CircleActionData load_action(const std::string& path);
void save_action(const CircleActionData& a, const std::string& path);
// "builtin:NAME" or a file path.
CircleActionData resolve_action_ref(const std::string& ref);

}  // namespace ellgen
