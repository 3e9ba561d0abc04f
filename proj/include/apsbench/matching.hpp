#pragma once

#include <utility>
#include <vector>

#include "apsbench/graph.hpp"
#include "apsbench/rational.hpp"

namespace apsbench {

struct Matching {
  std::vector<int> edge_ids;  // sorted ascending
  Rational value;             // exact total weight
};

struct FractionalMatching {
  std::vector<double> fraction;  // per edge id, per multiplicity unit
  Rational value;                // exact total weight (solver outputs only)
};

/// Exact maximum-weight matching (blossom). Deterministic.
Matching max_weight_matching(const Graph& g);

/// Exact maximum-weight fractional matching: maximum-weight matching on
/// the bipartite double cover, halved. The returned solution is
/// half-integral (fractions in {0, 1/2, 1}).
FractionalMatching max_weight_fractional_matching(const Graph& g);

/// Closed-form tight lower bound on the maximum matching of a k-regular
/// graph of order n. Exact rational; k even >= 4 or odd >= 3.
Rational tight_bound(int k, long long n);
double tight_bound_value(int k, long long n);

/// (m_k, mhat_k): plain and size-shifted ratio of the tight matching bound
/// to the perfect fractional matching n/2.
std::pair<double, double> matching_ratios(int k, long long n);

struct WeightedMatchingRatios {
  double m_w = 0;     // w(M) / w(FM)
  double mhat_w = 0;  // (w(G)+w(M)) / (w(G)+w(FM))
  Rational mwm, mwfm;
  double total_weight = 0;
};
WeightedMatchingRatios weighted_matching_ratios(const Graph& g);

/// Feasibility checks used by tests and the verification suites.
bool is_valid_matching(const Graph& g, const std::vector<int>& edge_ids);
bool is_feasible_fractional(const Graph& g, const std::vector<double>& fraction,
                            double tol = 1e-9);

/// Multiply all weights by the smallest common denominator (continued
/// fractions, denominators up to 10^6) and return integer weights plus the
/// scale. Throws if weights are not rational within 1e-9 at that cap.
std::pair<std::vector<long long>, long long> integerize_weights(const Graph& g);

}  // namespace apsbench
