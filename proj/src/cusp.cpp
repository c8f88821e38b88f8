#include "ellgen/cusp.hpp"

#include <map>
#include <mutex>

namespace ellgen {

const char* cusp_name(Cusp c) { return c == Cusp::kSignature ? "signature" : "ahat"; }

Cusp cusp_from_name(const std::string& name) {
  if (name == "signature") return Cusp::kSignature;
  if (name == "ahat") return Cusp::kAhat;
  fail(ErrorCode::kUnknownName, "unknown cusp '" + name + "' (expected signature or ahat)");
}

IndexSeries cusp_series(const ManifoldModel& m, Cusp cusp, int qorder) {
  return cusp == Cusp::kSignature ? loop_sign_series(m, qorder) : raw_ahat_series(m, qorder);
}

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, CuspExpansion> g_cache;

int common_order(const QSeriesQ& a, const QSeriesQ& b) { return std::min(a.order(), b.order()); }

}  // namespace

CuspExpansion generator_expansions(Cusp cusp, int qorder) {
  if (qorder < 2) fail(ErrorCode::kDomain, "generator expansions need q-order >= 2");
  const std::pair<int, int> key{static_cast<int>(cusp), qorder};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    const auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
  }
  CuspExpansion e;
  e.cusp = cusp;
  e.delta = cusp_series(builtin("CP2"), cusp, qorder).series;
  e.epsilon = cusp_series(builtin("HP2"), cusp, qorder).series;
  e.provenance = std::string("derived from the ") + cusp_name(cusp) + "-cusp index series of CP2 and HP2";
  // phi(CP4) = (3 delta^2 - epsilon) / 2
  const QSeriesQ cp4 = cusp_series(builtin("CP4"), cusp, qorder).series;
  const QSeriesQ rhs = QSeriesQ(Rational(3)) * e.delta * e.delta - QSeriesQ(Rational(2)) * cp4;
  if (!e.epsilon.agrees_with(rhs, common_order(e.epsilon, rhs))) {
    fail(ErrorCode::kInternalInconsistency, std::string("epsilon consistency identity fails at the ") + cusp_name(cusp) + " cusp");
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.try_emplace(key, e).first->second;
}

ModularityReport modularity_report(const ManifoldModel& m, Cusp cusp, int qorder) {
  const CuspExpansion gen = generator_expansions(cusp, qorder);
  ModularityReport r;
  r.genus = genus_value(generic_spec(), m).value;
  r.index_series = cusp_series(m, cusp, qorder).series;
  r.substituted = r.genus.evaluate<QSeriesQ>(gen.delta, gen.epsilon).truncated(2 * qorder);
  r.holds = r.index_series.agrees_with(r.substituted, common_order(r.index_series, r.substituted));
  return r;
}

bool verify_modularity(const ManifoldModel& m, Cusp cusp, int qorder) { return modularity_report(m, cusp, qorder).holds; }

NormalizedPhi normalized_phi(const ManifoldModel& m, Cusp cusp, int qorder) {
  const int k = m.quarter_dimension();
  if (k < 0) fail(ErrorCode::kDomain, m.name + ": normalized genus needs dimension divisible by 4");
  if (k == 0) return normalized_points(m.cohomology.pairing, qorder);
  const QSeriesQ eps = generator_expansions(cusp, std::max(qorder, 2)).epsilon;
  const QSeriesQ phi = cusp_series(m, cusp, qorder).series;
  NormalizedPhi out;
  out.k = k;
  if (k % 2 == 0) {
    out.value = phi * ring_pow(eps, k / 2).inverse();
  } else {
    out.squared = true;
    out.value = phi * phi * ring_pow(eps, k).inverse();
  }
  out.value = out.value.truncated(2 * qorder);
  return out;
}

NormalizedPhi normalized_points(const Rational& count, int qorder) {
  return {QSeriesQ(count).truncated(2 * qorder), false, 0};
}

bool self_intersection_compare(const NormalizedPhi& a, const NormalizedPhi& b) {
  QSeriesQ x = a.value, y = b.value;
  if (a.squared != b.squared) {
    if (!a.squared) x = x * x;
    if (!b.squared) y = y * y;
  }
  return x.agrees_with(y, common_order(x, y));
}

Rational self_intersection_count(const ManifoldModel& m, const TruncPoly<Rational>& dual_class) {
  return m.cohomology.evaluate(dual_class * dual_class);
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

IndependenceReport generator_independence(Cusp cusp, int qorder, int max_weight) {
  const CuspExpansion gen = generator_expansions(cusp, qorder);
  const int order = 2 * qorder;
  IndependenceReport report;
  for (int w = 2; w <= max_weight; w += 2) {
    std::vector<std::vector<Rational>> rows;
    for (int b = 0; 4 * b <= w; ++b) {
      if ((w - 4 * b) % 2 != 0) continue;
      const int a = (w - 4 * b) / 2;
      const QSeriesQ s = (ring_pow(gen.delta, a) * ring_pow(gen.epsilon, b)).truncated(order);
      std::vector<Rational> row;
      for (int e = 0; e <= order; ++e) row.push_back(s.coeff(e));
      rows.push_back(row);
    }
    const int monomials = static_cast<int>(rows.size());
    const int rank = rational_rank(std::move(rows));
    report.weights.push_back(w);
    report.ranks.push_back(rank);
    report.monomials.push_back(monomials);
    report.independent = report.independent && rank == monomials;
  }
  return report;
}

}  // namespace ellgen
