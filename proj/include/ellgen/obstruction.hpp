#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellgen/json_io.hpp"
#include "ellgen/localizer.hpp"

namespace ellgen {

// k~ = min(k mod o, o - k mod o).
int reduced_weight(long k, int o);

// (sum_j k~(w_j)) / o over the normal weights of one fixed component.
Rational m_o(std::span<const int> weights, int o);
// Integer numerator sum_j k~(w_j).
long m_o_numerator(std::span<const int> weights, int o);
// Minimum of m_o over fixed components, each given by its normal weights.
Rational m_o_min(const std::vector<std::vector<int>>& components, int o);
// Codimension of the component of M^sigma (sigma of order o) through the fixed component.
int codim(std::span<const int> weights, int o);
int codim_min(const std::vector<std::vector<int>>& components, int o);

std::vector<std::vector<int>> component_weights(const CircleActionData& a);

enum class VanishSource { kInvolutionCodim, kCyclicMo, kCyclicCodim };
const char* vanish_source_name(VanishSource s);

// Number of leading Phi_0 coefficients forced to vanish: the largest r + 1 whose
// hypothesis holds. codim > 4r gives ceil(c/4); m_o > r gives ceil(m_o);
// codim > 2 o r gives ceil(c/(2o)). Value is c or m_o; o is ignored for involutions.
int vanish_prediction(VanishSource source, const Rational& value, int o = 2);

struct CrossCheck {
  bool applicable = false;  // spin ambient
  Rational m_o;
  int codim = 0;
  int predicted = 0;                     // max over the three predictions
  std::optional<int> first_nonzero;      // first nonzero Phi_0 index within the q-order
  std::string status;                    // PASS | FAIL | N/A
};
CrossCheck cross_check_prediction(const ManifoldModel& m, const std::vector<std::vector<int>>& components, int o, int qorder);
CrossCheck cross_check_prediction(const CircleActionData& a, int o, int qorder);

using IntMatrix = std::vector<std::vector<long long>>;

struct LatticeNormalForm {
  IntMatrix matrix;                // transform * input with columns permuted
  IntMatrix transform;             // rows: new basis in terms of the old
  std::vector<int> column_order;   // column j of the result is column column_order[j] of the input
  long long covering_degree = 1;   // |det transform|, coprime to p
};
// Rank of the mod p reduction.
int rank_mod_p(const IntMatrix& a, int p);
// Left square block diagonal with entries coprime to p.
bool is_lattice_normal(const IntMatrix& a, int p);
LatticeNormalForm lattice_normal_form(const IntMatrix& a, int p);
long long determinant(const IntMatrix& a);

struct CodeAudit {
  int r = 0;
  int k = 0;
  std::vector<std::uint64_t> words;       // all 2^{2r} combinations of the rows mod 2, Gray order
  std::vector<int> weight_distribution;   // index = weight
  bool sublinear = true;
  bool sublinear_exhaustive = true;       // pair checks ran on all pairs (at most 2^12 words)
  bool weight_dichotomy = true;           // wt <= 2r or cowt <= 2r - 2 for every word
  bool all_low_weight = true;             // wt <= 2r for every word
  bool closure_applicable = false;        // 2k >= 6r
  bool low_weight_closed = true;          // sums of words of weight <= 2r have weight <= 2r
  std::vector<int> row_odd_counts;
  bool rows_two_odd = true;               // each row has exactly two odd entries
  std::vector<int> tail_column_odd_counts;  // columns 2r .. 2k-1
  bool tail_columns_even = true;
  int tail_columns_nonzero = 0;
  bool tail_nonzero_at_most_r = true;
};
// A is 2r x 2k; 2r <= 24 and 2k <= 64.
CodeAudit code_audit(const IntMatrix& a, int r, int k);

// Restricted fixed point dimension: dim F1 + dim F2 < dim X for distinct components.
struct FixedDimensionRow {
  int x_dim = 0;
  std::vector<int> component_dims;
};
bool rfpd_check(const std::vector<FixedDimensionRow>& table);

IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& a);
Json code_audit_to_json(const CodeAudit& c);

}  // namespace ellgen
