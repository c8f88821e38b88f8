#pragma once

#include <string>
#include <vector>

#include "ellgen/genus.hpp"

namespace ellgen {

enum class Cusp { kSignature, kAhat };

const char* cusp_name(Cusp c);
Cusp cusp_from_name(const std::string& name);

// The index series a cusp attaches to M: loop_sign_series (signature) or the raw
// Ahat-word series without q^{-k/2} (ahat).
IndexSeries cusp_series(const ManifoldModel& m, Cusp cusp, int qorder);

// delta(q) := series of CP2, epsilon(q) := series of HP2 at the given cusp.
struct CuspExpansion {
  Cusp cusp = Cusp::kSignature;
  QSeriesQ delta;
  QSeriesQ epsilon;
  std::string provenance;
};

// Checks epsilon = 3 delta^2 - 2 series(CP4); kInternalInconsistency on failure.
// Results are cached per (cusp, qorder); the cache is written once per key.
CuspExpansion generator_expansions(Cusp cusp, int qorder);

struct ModularityReport {
  bool holds = false;
  ModularPoly genus;
  QSeriesQ index_series;
  QSeriesQ substituted;  // genus(delta(q), epsilon(q))
};
ModularityReport modularity_report(const ManifoldModel& m, Cusp cusp, int qorder);
bool verify_modularity(const ManifoldModel& m, Cusp cusp, int qorder);

// Weight-zero normalization phi(M)/epsilon^{k/2}. For odd k the square
// phi(M)^2/epsilon^k is returned with squared = true.
struct NormalizedPhi {
  QSeriesQ value;
  bool squared = false;
  int k = 0;
};
NormalizedPhi normalized_phi(const ManifoldModel& m, Cusp cusp, int qorder);
// A count of points c contributes c * Phi(pt).
NormalizedPhi normalized_points(const Rational& count, int qorder);

// Equality to the common known order, passing to squares when either side is squared.
bool self_intersection_compare(const NormalizedPhi& a, const NormalizedPhi& b);

// <c^2, [M]> for the Poincare dual c of a middle-dimensional fixed component.
Rational self_intersection_count(const ManifoldModel& m, const TruncPoly<Rational>& dual_class);

// For every weight 2w <= max_weight the series of the monomials delta^a epsilon^b
// (2a + 4b = 2w) are linearly independent to the computed order.
struct IndependenceReport {
  bool independent = true;
  std::vector<int> weights;
  std::vector<int> ranks;
  std::vector<int> monomials;
};
IndependenceReport generator_independence(Cusp cusp, int qorder, int max_weight);

// Rank over Q of a dense matrix.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace ellgen
