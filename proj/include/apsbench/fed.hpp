#pragma once

#include <optional>
#include <vector>

#include "apsbench/angles.hpp"
#include "apsbench/graph.hpp"
#include "apsbench/henning_yeo.hpp"
#include "apsbench/matching.hpp"

namespace apsbench {

struct FedConfig {
  double tol = 1e-10;       // parameter-axis tolerance of the 1D searches
  int grid = 10000;         // dense-scan points for the inner minimization
  double kappa_max = 2.0;   // outer search window (0, kappa_max]
  double kappa_seed = 1.0;  // decay parameter used to seed multi-angle sweeps
};

/// Per-edge energy bound T(kappa, m) of the decaying-angle rule
/// cos 2theta = exp(-kappa m).
double edge_bound(double kappa, double m);

/// R(kappa, m) = T(kappa, m) / (1 + m), the edge-level approximation ratio
/// against the fractional-matching benchmark.
double edge_ratio(double kappa, double m);

struct MaxMinResult {
  double value = 0;
  double kappa = 0;
};

/// max over kappa of the worst-case R over the full fraction range [0, 1];
/// value is half the golden ratio.
MaxMinResult maxmin_ratio(const FedConfig& cfg = {});

/// Same with fractions restricted to [m_lo, m_hi]; degenerates to a plain
/// 1D maximization when the interval is a point.
MaxMinResult maxmin_ratio_interval(double m_lo, double m_hi, const FedConfig& cfg = {});

/// r_k: the single-fraction case m = 1/k of k-regular graphs.
MaxMinResult regular_ratio(int k, const FedConfig& cfg = {});

/// m_ij = 1 / edge-degree, per multiplicity unit. Integer weights required
/// (round weighted graphs to multi-edges first). Always feasible; for
/// k-regular graphs this is the perfect fractional matching.
FractionalMatching assign_fractions_edge_degree(const Graph& g);

/// theta = arccos(exp(-kappa m)) / 2 per edge.
AngleAssignment angles_from_fractions(const Graph& g, const FractionalMatching& fm,
                                      double kappa);

/// (w(G) + w(restricted)) / (w(G) + w(FM_G)); restricted must be feasible.
double shifted_fm_ratio(const Graph& g, const FractionalMatching& restricted);

struct ImprovedRatioResult {
  double ratio = 0;  // exact-energy ratio against size + n/2
  double theta = 0;  // maximizing uniform angle
};

/// Maximize the exact closed-form energy over one uniform angle on an
/// unweighted Henning-Yeo instance.
ImprovedRatioResult improved_ratio(const HYInstance& inst, const FedConfig& cfg = {});

struct WeightedFedResult {
  double ratio = 0;            // energy / (w(G) + w(FM^w))
  std::vector<double> thetas;  // internal, attachment[, bipartite]
  Rational mwfm;               // exact fractional matching value of the instance
  double denominator = 0;
};

/// Multi-angle search on a weighted instance: one angle per edge class,
/// seeded by the edge-degree fractions of the multi-edge rounding.
WeightedFedResult weighted_fed(const HYInstance& inst, const FedConfig& cfg = {});

/// One table row: FED ratios against matching ratios, with the signed
/// conjecture gaps.
struct RatioReport {
  int k = 0;
  int p = 0;
  long long order = 0;
  double r_k = 0, kappa_k = 0;
  double rhat_k = 0, theta_k = 0;
  double m_k = 0, mhat_k = 0;
  double gap = 0;  // mhat_k - rhat_k; negative would contradict the conjecture
  std::optional<double> d_w;
  std::optional<double> rhat_w, m_w, mhat_w, gap_w;
};

/// Assemble the full row for one unweighted instance, re-weighting the same
/// topology when d_w is given.
RatioReport aps_gap_report(const HYInstance& inst, std::optional<double> d_w,
                           const FedConfig& cfg = {});

}  // namespace apsbench
