#include "ellgen/obstruction.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include "ellgen/code_kernels.hpp"

namespace ellgen {

int reduced_weight(long k, int o) {
  if (o < 2) fail(ErrorCode::kDomain, "order o must be >= 2");
  const long r = ((k % o) + o) % o;
  return static_cast<int>(std::min(r, o - r));
}

long m_o_numerator(std::span<const int> weights, int o) {
  long sum = 0;
  for (int w : weights) sum += reduced_weight(w, o);
  return sum;
}

Rational m_o(std::span<const int> weights, int o) { return Rational(m_o_numerator(weights, o), o); }

Rational m_o_min(const std::vector<std::vector<int>>& components, int o) {
  if (components.empty()) fail(ErrorCode::kDomain, "m_o needs at least one fixed component");
  Rational best = m_o(components.front(), o);
  for (const auto& c : components) best = std::min(best, m_o(c, o));
  return best;
}

int codim(std::span<const int> weights, int o) {
  int n = 0;
  for (int w : weights) n += reduced_weight(w, o) != 0 ? 1 : 0;
  return 2 * n;
}

int codim_min(const std::vector<std::vector<int>>& components, int o) {
  if (components.empty()) fail(ErrorCode::kDomain, "codim needs at least one fixed component");
  int best = codim(components.front(), o);
  for (const auto& c : components) best = std::min(best, codim(c, o));
  return best;
}

std::vector<std::vector<int>> component_weights(const CircleActionData& a) {
  std::vector<std::vector<int>> out;
  for (const FixedComponent& c : a.components) {
    std::vector<int> w;
    for (const NormalEntry& e : c.normal) w.push_back(e.weight);
    out.push_back(w);
  }
  return out;
}

const char* vanish_source_name(VanishSource s) {
  switch (s) {
    case VanishSource::kInvolutionCodim: return "involution-codim";
    case VanishSource::kCyclicMo: return "cyclic-m_o";
    case VanishSource::kCyclicCodim: return "cyclic-codim";
  }
  return "";
}

namespace {

// ceil(x) for x >= 0; negative inputs predict nothing.
int ceil_nonnegative(const Rational& x) {
  if (x <= Rational(0)) return 0;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return static_cast<int>(Rational(q).to_long());
}

}  // namespace

int vanish_prediction(VanishSource source, const Rational& value, int o) {
  switch (source) {
    case VanishSource::kInvolutionCodim:  // codim > 4r
      return ceil_nonnegative(value / Rational(4));
    case VanishSource::kCyclicMo:  // m_o > r
      return ceil_nonnegative(value);
    case VanishSource::kCyclicCodim:  // codim > 2 o r
      if (o < 2) fail(ErrorCode::kDomain, "order o must be >= 2");
      return ceil_nonnegative(value / Rational(2 * o));
  }
  return 0;
}

CrossCheck cross_check_prediction(const ManifoldModel& m, const std::vector<std::vector<int>>& components, int o, int qorder) {
  CrossCheck out;
  out.m_o = m_o_min(components, o);
  out.codim = codim_min(components, o);
  out.predicted = std::max(vanish_prediction(VanishSource::kCyclicMo, out.m_o, o),
                           vanish_prediction(VanishSource::kCyclicCodim, Rational(out.codim), o));
  if (o == 2) out.predicted = std::max(out.predicted, vanish_prediction(VanishSource::kInvolutionCodim, Rational(out.codim)));
  out.applicable = m.spin && m.dim_real % 4 == 0;
  if (!out.applicable) {
    out.status = "N/A";
    return out;
  }
  out.first_nonzero = first_nonzero_phi0_index(m, qorder);
  out.status = out.first_nonzero && *out.first_nonzero < out.predicted ? "FAIL" : "PASS";
  return out;
}

CrossCheck cross_check_prediction(const CircleActionData& a, int o, int qorder) {
  return cross_check_prediction(a.ambient, component_weights(a), o, qorder);
}

namespace {

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::kResourceCap, "integer overflow in lattice reduction");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::kResourceCap, "integer overflow in lattice reduction");
  return r;
}

long long mod_p(long long x, int p) { return ((x % p) + p) % p; }

long long inverse_mod_p(long long x, int p) {
  long long result = 1, base = mod_p(x, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_rectangular(const IntMatrix& a) {
  if (a.empty() || a.front().empty()) fail(ErrorCode::kSchema, "weight matrix must be non-empty");
  for (const auto& row : a) {
    if (row.size() != a.front().size()) fail(ErrorCode::kSchema, "weight matrix rows must have equal length");
  }
}

// row_i <- alpha row_i + beta row_j
void combine_rows(IntMatrix& m, std::size_t i, long long alpha, long long beta, std::size_t j) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_add(checked_mul(alpha, m[i][c]), checked_mul(beta, m[j][c]));
}

}  // namespace

int rank_mod_p(const IntMatrix& a, int p) {
  check_rectangular(a);
  IntMatrix m = a;
  for (auto& row : m) {
    for (auto& x : row) x = mod_p(x, p);
  }
  int rank = 0;
  for (std::size_t c = 0; c < m.front().size() && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    const auto& pr = m[static_cast<std::size_t>(rank)];
    const long long inv = inverse_mod_p(pr[c], p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const long long f = m[r][c] * inv % p;
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] = mod_p(m[r][j] - f * pr[j], p);
    }
    ++rank;
  }
  return rank;
}

bool is_lattice_normal(const IntMatrix& a, int p) {
  check_rectangular(a);
  if (a.front().size() < a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i == j ? mod_p(a[i][j], p) == 0 : a[i][j] != 0) return false;
    }
  }
  return true;
}

long long determinant(const IntMatrix& a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) fail(ErrorCode::kSchema, "determinant needs a square matrix");
  }
  if (n == 0) return 1;
  IntMatrix m = a;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (checked_mul(m[i][j], m[k][k]) - checked_mul(m[i][k], m[k][j])) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LatticeNormalForm lattice_normal_form(const IntMatrix& a, int p) {
  check_rectangular(a);
  if (!is_prime(p)) fail(ErrorCode::kDomain, "p must be prime");
  const std::size_t n = a.size(), cols = a.front().size();
  if (rank_mod_p(a, p) != static_cast<int>(n)) {
    fail(ErrorCode::kEffectiveness, "rows are dependent mod " + std::to_string(p) + "; the lattice map is not injective mod p");
  }
  LatticeNormalForm out;

  // Columns that raise the mod p rank go first.
  std::vector<int> pivots, rest;
  {
    IntMatrix chosen;
    for (std::size_t c = 0; c < cols; ++c) {
      IntMatrix trial = chosen;
      for (std::size_t r = 0; r < n; ++r) {
        if (trial.size() <= r) trial.resize(n);
        trial[r].push_back(a[r][c]);
      }
      if (static_cast<int>(pivots.size()) < static_cast<int>(n) && rank_mod_p(trial, p) > static_cast<int>(pivots.size())) {
        pivots.push_back(static_cast<int>(c));
        chosen = trial;
      } else {
        rest.push_back(static_cast<int>(c));
      }
    }
  }
  out.column_order = pivots;
  out.column_order.insert(out.column_order.end(), rest.begin(), rest.end());

  // Work on [A | I] so the transform is tracked by the same row operations.
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (int c : out.column_order) m[r].push_back(a[r][static_cast<std::size_t>(c)]);
    for (std::size_t j = 0; j < n; ++j) m[r].push_back(r == j ? 1 : 0);
  }

  // Unimodular: upper triangular left block.
  for (std::size_t c = 0; c < n; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t r = c; r < n; ++r) {
        if (m[r][c] != 0 && (best == n || std::llabs(m[r][c]) < std::llabs(m[best][c]))) best = r;
      }
      if (best == n) fail(ErrorCode::kInternalInconsistency, "singular left block after pivot selection");
      std::swap(m[best], m[c]);
      bool done = true;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        combine_rows(m, r, 1, -(m[r][c] / m[c][c]), c);
        done = done && m[r][c] == 0;
      }
      if (done) break;
    }
    if (mod_p(m[c][c], p) == 0) fail(ErrorCode::kInternalInconsistency, "diagonal entry divisible by p");
  }
  // Unimodular: entries above the diagonal divisible by p.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long beta = mod_p(-mod_p(m[i][j], p) * inverse_mod_p(m[j][j], p), p);
      if (beta != 0) combine_rows(m, i, 1, beta, j);
    }
  }
  // b_i <- alpha b_i + beta b_j, i < j, alpha prime to p, beta = 0 mod p.
  for (std::size_t i = n - 1; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long e = m[i][j];
      if (e == 0) continue;
      const long long g = std::gcd(std::llabs(e), std::llabs(m[j][j]));
      combine_rows(m, i, m[j][j] / g, -e / g, j);
    }
  }

  for (std::size_t r = 0; r < n; ++r) {
    out.matrix.emplace_back(m[r].begin(), m[r].begin() + static_cast<long>(cols));
    out.transform.emplace_back(m[r].begin() + static_cast<long>(cols), m[r].end());
  }
  out.covering_degree = std::llabs(determinant(out.transform));
  if (!is_lattice_normal(out.matrix, p) || out.covering_degree % p == 0) {
    fail(ErrorCode::kInternalInconsistency, "lattice normal form postcondition failed");
  }
  return out;
}

CodeAudit code_audit(const IntMatrix& a, int r, int k) {
  check_rectangular(a);
  if (r < 1 || k < r) fail(ErrorCode::kDomain, "code audit needs 1 <= r <= k");
  if (2 * r > 24 || 2 * k > 64) fail(ErrorCode::kResourceCap, "code audit is capped at 2r <= 24 and 2k <= 64");
  if (a.size() != static_cast<std::size_t>(2 * r) || a.front().size() != static_cast<std::size_t>(2 * k)) {
    fail(ErrorCode::kDimensionMismatch, "code audit expects a 2r x 2k matrix");
  }
  CodeAudit out;
  out.r = r;
  out.k = k;
  std::vector<std::uint64_t> rows;
  for (const auto& row : a) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (mod_p(row[j], 2) != 0) mask |= std::uint64_t{1} << j;
    }
    rows.push_back(mask);
  }
  const std::size_t count = std::size_t{1} << (2 * r);
  out.words.resize(count);
  std::uint64_t w = 0;
  for (std::size_t t = 1; t < count; ++t) {
    w ^= rows[static_cast<std::size_t>(std::countr_zero(t))];
    out.words[t] = w;
  }
  std::vector<std::uint32_t> weights(count);
  kernels::popcount(out.words.data(), weights.data(), count);

  const int low = 2 * r;
  out.weight_distribution.assign(static_cast<std::size_t>(2 * k + 1), 0);
  std::vector<std::uint64_t> low_words;
  for (std::size_t t = 0; t < count; ++t) {
    const int wt = static_cast<int>(weights[t]);
    ++out.weight_distribution[static_cast<std::size_t>(wt)];
    out.weight_dichotomy = out.weight_dichotomy && (wt <= low || 2 * k - wt <= low - 2);
    out.all_low_weight = out.all_low_weight && wt <= low;
    if (wt <= low) low_words.push_back(out.words[t]);
  }
  // All pairs up to 2^12 words; beyond that every word against the generators.
  out.sublinear_exhaustive = count <= 4096;
  const std::vector<std::uint64_t>& partners = out.sublinear_exhaustive ? out.words : rows;
  for (std::uint64_t x : out.words) {
    if (kernels::sublinear_violations(x, partners.data(), partners.size()) != 0) {
      out.sublinear = false;
      break;
    }
  }
  out.closure_applicable = 2 * k >= 6 * r;
  for (std::size_t i = 0; i < low_words.size() && out.low_weight_closed; ++i) {
    for (std::size_t j = out.sublinear_exhaustive ? i : low_words.size(); j < low_words.size(); ++j) {
      if (std::popcount(low_words[i] ^ low_words[j]) > low) {
        out.low_weight_closed = false;
        break;
      }
    }
  }
  for (std::uint64_t row : rows) {
    out.row_odd_counts.push_back(std::popcount(row));
    out.rows_two_odd = out.rows_two_odd && std::popcount(row) == 2;
  }
  for (int j = low; j < 2 * k; ++j) {
    int odd = 0;
    for (std::uint64_t row : rows) odd += static_cast<int>((row >> j) & 1U);
    out.tail_column_odd_counts.push_back(odd);
    out.tail_columns_even = out.tail_columns_even && odd % 2 == 0;
    out.tail_columns_nonzero += odd != 0 ? 1 : 0;
  }
  out.tail_nonzero_at_most_r = out.tail_columns_nonzero <= r;
  return out;
}

bool rfpd_check(const std::vector<FixedDimensionRow>& table) {
  for (const FixedDimensionRow& row : table) {
    for (std::size_t i = 0; i < row.component_dims.size(); ++i) {
      for (std::size_t j = i + 1; j < row.component_dims.size(); ++j) {
        if (row.component_dims[i] + row.component_dims[j] >= row.x_dim) return false;
      }
    }
  }
  return true;
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array()) fail(ErrorCode::kSchema, "weight matrix must be an array of integer rows");
  IntMatrix out;
  for (const Json& row : rows) {
    if (!row.is_array()) fail(ErrorCode::kSchema, "weight matrix rows must be arrays");
    std::vector<long long> r;
    for (const Json& x : row) {
      if (!x.is_number_integer()) fail(ErrorCode::kSchema, "weight matrix entries must be integers");
      r.push_back(x.get<long long>());
    }
    out.push_back(r);
  }
  check_rectangular(out);
  return out;
}

Json matrix_to_json(const IntMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) out.push_back(row);
  return out;
}

Json code_audit_to_json(const CodeAudit& c) {
  Json out;
  out["r"] = c.r;
  out["k"] = c.k;
  out["words"] = c.words.size();
  out["weight_distribution"] = c.weight_distribution;
  out["sublinear"] = c.sublinear;
  out["pairs_exhaustive"] = c.sublinear_exhaustive;
  out["weight_dichotomy"] = c.weight_dichotomy;
  out["all_low_weight"] = c.all_low_weight;
  out["closure_applicable"] = c.closure_applicable;
  out["low_weight_closed"] = c.low_weight_closed;
  out["row_odd_counts"] = c.row_odd_counts;
  out["rows_two_odd"] = c.rows_two_odd;
  out["tail_column_odd_counts"] = c.tail_column_odd_counts;
  out["tail_columns_even"] = c.tail_columns_even;
  out["tail_columns_nonzero"] = c.tail_columns_nonzero;
  out["tail_nonzero_at_most_r"] = c.tail_nonzero_at_most_r;
  return out;
}

}  // namespace ellgen
