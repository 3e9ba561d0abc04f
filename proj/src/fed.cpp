#include "apsbench/fed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "apsbench/energy.hpp"
#include "apsbench/optimize.hpp"

namespace apsbench {

double edge_bound(double kappa, double m) {
  if (!(kappa >= 0) || m < -1e-15 || m > 1 + 1e-15)
    throw std::invalid_argument("edge_bound: domain");
  double decay = std::exp(-kappa * (1 - m));
  double sin_sq = 1 - std::exp(-2 * kappa * m);
  return 0.5 * (1 + decay * decay + 2 * std::sqrt(std::max(0.0, sin_sq)) * decay);
}

double edge_ratio(double kappa, double m) { return edge_bound(kappa, m) / (1 + m); }

namespace {

// dense grid plus local golden refinement; the inner problem is smooth but
// its minimizer can sit at either boundary or inside
double worst_ratio(double kappa, double m_lo, double m_hi, const FedConfig& cfg) {
  if (m_hi - m_lo < 1e-15) return edge_ratio(kappa, m_lo);
  auto neg = [&](double m) { return -edge_ratio(kappa, m); };
  auto res = grid_then_golden_max(neg, m_lo, m_hi, cfg.grid, 1e-13);
  return -res.value;
}

}  // namespace

MaxMinResult maxmin_ratio_interval(double m_lo, double m_hi, const FedConfig& cfg) {
  if (m_lo < 0 || m_hi > 1 || m_lo > m_hi)
    throw std::invalid_argument("maxmin: bad fraction interval");
  auto objective = [&](double kappa) { return worst_ratio(kappa, m_lo, m_hi, cfg); };
  auto res = grid_then_golden_max(objective, 1e-8, cfg.kappa_max, 400, cfg.tol);
  return {res.value, res.x};
}

MaxMinResult maxmin_ratio(const FedConfig& cfg) { return maxmin_ratio_interval(0.0, 1.0, cfg); }

MaxMinResult regular_ratio(int k, const FedConfig& cfg) {
  if (k < 2) throw std::invalid_argument("regular_ratio: k must be >= 2");
  return maxmin_ratio_interval(1.0 / k, 1.0 / k, cfg);
}

FractionalMatching assign_fractions_edge_degree(const Graph& g) {
  FractionalMatching out;
  out.fraction.resize(g.edge_count());
  std::vector<long long> iw(g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    double r = std::round(e.weight);
    if (std::abs(e.weight - r) > 1e-9 || r < 1)
      throw std::invalid_argument(
          "edge-degree fractions: integer weights required, round to multi-edges first");
    iw[id] = static_cast<long long>(r);
    out.fraction[id] = 1.0 / g.edge_degree(id);
  }
  // exact value: lcm over the distinct edge degrees stays tiny in practice
  long long lcm = 1;
  std::set<int> degrees;
  for (int id = 0; id < g.edge_count(); ++id) degrees.insert(g.edge_degree(id));
  for (int d : degrees) {
    lcm = std::lcm(lcm, static_cast<long long>(d));
    if (lcm > (1LL << 40))
      throw std::invalid_argument("edge-degree fractions: degree lcm overflow");
  }
  long long num = 0;
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    num += iw[id] * e.mult * (lcm / g.edge_degree(id));
  }
  out.value = Rational(num, lcm);
  return out;
}

AngleAssignment angles_from_fractions(const Graph& g, const FractionalMatching& fm,
                                      double kappa) {
  if (!(kappa > 0)) throw std::invalid_argument("angles_from_fractions: kappa must be > 0");
  if (static_cast<int>(fm.fraction.size()) != g.edge_count())
    throw std::invalid_argument("angles_from_fractions: fraction count mismatch");
  std::vector<double> theta(fm.fraction.size());
  for (size_t i = 0; i < theta.size(); ++i)
    theta[i] = 0.5 * std::acos(std::exp(-kappa * fm.fraction[i]));
  return AngleAssignment(std::move(theta));
}

double shifted_fm_ratio(const Graph& g, const FractionalMatching& restricted) {
  if (!is_feasible_fractional(g, restricted.fraction))
    throw std::invalid_argument("shifted_fm_ratio: infeasible fractional matching");
  double w = g.total_weight();
  double restricted_value = 0;
  for (int id = 0; id < g.edge_count(); ++id)
    restricted_value += g.edge(id).weight * g.edge(id).mult * restricted.fraction[id];
  double fm = max_weight_fractional_matching(g).value.to_double();
  return (w + restricted_value) / (w + fm);
}

ImprovedRatioResult improved_ratio(const HYInstance& inst, const FedConfig& cfg) {
  const Graph& g = inst.graph;
  for (const auto& e : g.edges())
    if (e.weight != 1.0)
      throw std::invalid_argument("improved_ratio: unweighted instance required");
  long long n = g.order();
  double denom = static_cast<double>(static_cast<long long>(inst.k) * n / 2) + n / 2.0;
  auto objective = [&](double theta) {
    return total_energy(g, AngleAssignment::uniform(g, theta)).total / denom;
  };
  auto res = grid_then_golden_max(objective, 0.0, std::numbers::pi / 4, 129, cfg.tol);
  return {res.value, res.x};
}

WeightedFedResult weighted_fed(const HYInstance& inst, const FedConfig& cfg) {
  const Graph& g = inst.graph;
  std::set<EdgeClass> present(inst.edge_class.begin(), inst.edge_class.end());
  bool even = inst.k % 2 == 0;
  std::vector<EdgeClass> classes = {EdgeClass::InternalQuasiComplete,
                                    EdgeClass::ExternalAttachment};
  if (!even) classes.push_back(EdgeClass::OtherExternal);
  if (std::set<EdgeClass>(classes.begin(), classes.end()) != present)
    throw std::invalid_argument("weighted_fed: edge classes do not match the parity of k");

  // round weights to multi-edges, then one fraction per class
  auto [iw, scale] = integerize_weights(g);
  long long div = 0;
  for (long long w : iw) div = std::gcd(div, w);
  std::vector<GraphEdge> rounded_edges = g.edges();
  for (int id = 0; id < g.edge_count(); ++id) {
    rounded_edges[id].mult = static_cast<int>(iw[id] / div);
    rounded_edges[id].weight = 1.0;
  }
  Graph rounded(g.order(), std::move(rounded_edges));
  FractionalMatching fractions = assign_fractions_edge_degree(rounded);
  std::map<EdgeClass, double> class_fraction;
  for (int id = 0; id < g.edge_count(); ++id) {
    auto [it, fresh] = class_fraction.emplace(inst.edge_class[id], fractions.fraction[id]);
    if (!fresh && std::abs(it->second - fractions.fraction[id]) > 1e-15)
      throw std::invalid_argument("weighted_fed: fractions are not constant per class");
  }

  WeightedFedResult out;
  out.mwfm = max_weight_fractional_matching(g).value;
  out.denominator = g.total_weight() + out.mwfm.to_double();

  std::vector<double> theta(classes.size());
  for (size_t c = 0; c < classes.size(); ++c)
    theta[c] = 0.5 * std::acos(std::exp(-cfg.kappa_seed * class_fraction[classes[c]]));

  auto assemble = [&](const std::vector<double>& th) {
    std::vector<double> per_edge(g.edge_count());
    for (int id = 0; id < g.edge_count(); ++id) {
      size_t c = std::find(classes.begin(), classes.end(), inst.edge_class[id]) -
                 classes.begin();
      per_edge[id] = th[c];
    }
    return AngleAssignment(std::move(per_edge));
  };
  auto objective = [&](const std::vector<double>& th) {
    return total_energy(g, assemble(th)).total / out.denominator;
  };

  double best = objective(theta);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double before = best;
    for (size_t c = 0; c < classes.size(); ++c) {
      auto line = [&](double t) {
        std::vector<double> probe = theta;
        probe[c] = t;
        return objective(probe);
      };
      auto res = grid_then_golden_max(line, 0.0, std::numbers::pi / 4, 64, cfg.tol);
      if (res.value > best) {
        best = res.value;
        theta[c] = res.x;
      }
    }
    if (best - before < 1e-10) break;
  }
  out.ratio = best;
  out.thetas = theta;
  return out;
}

RatioReport aps_gap_report(const HYInstance& inst, std::optional<double> d_w,
                           const FedConfig& cfg) {
  RatioReport row;
  row.k = inst.k;
  row.p = inst.p;
  row.order = inst.graph.order();
  auto rk = regular_ratio(inst.k, cfg);
  row.r_k = rk.value;
  row.kappa_k = rk.kappa;
  auto ir = improved_ratio(inst, cfg);
  row.rhat_k = ir.ratio;
  row.theta_k = ir.theta;
  auto [m_k, mhat_k] = matching_ratios(inst.k, row.order);
  row.m_k = m_k;
  row.mhat_k = mhat_k;
  row.gap = row.mhat_k - row.rhat_k;
  if (d_w) {
    row.d_w = d_w;
    HYInstance weighted = inst;
    weighted.graph = apply_weights(inst.graph, inst.edge_class, *d_w, 1.0);
    auto ratios = weighted_matching_ratios(weighted.graph);
    row.m_w = ratios.m_w;
    row.mhat_w = ratios.mhat_w;
    auto fed = weighted_fed(weighted, cfg);
    row.rhat_w = fed.ratio;
    row.gap_w = *row.mhat_w - *row.rhat_w;
  }
  return row;
}

}  // namespace apsbench
