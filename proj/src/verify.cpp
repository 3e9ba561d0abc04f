#include "apsbench/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "apsbench/energy.hpp"
#include "apsbench/fed.hpp"
#include "apsbench/henning_yeo.hpp"
#include "apsbench/matching.hpp"
#include "apsbench/statevector.hpp"

namespace apsbench {

namespace {

constexpr double kPi4 = std::numbers::pi / 4;

struct Rng64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

Graph random_connected(Rng64& rng, int n, double extra = 0.35) {
  std::vector<GraphEdge> edges;
  std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(v));
    edges.push_back({u, v, 1, 1.0});
    have[u][v] = have[v][u] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have[u][v] && rng.uniform() < extra) edges.push_back({u, v, 1, 1.0});
  return Graph(n, std::move(edges));
}

Graph random_unit_graph(Rng64& rng, int n, double prob) {
  std::vector<GraphEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < prob) edges.push_back({u, v, 1, 1.0});
  return Graph(n, std::move(edges));
}

AngleAssignment random_angles(Rng64& rng, const Graph& g) {
  std::vector<double> theta(g.edge_count());
  for (auto& t : theta) t = rng.uniform() * kPi4;
  return AngleAssignment(std::move(theta));
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(12);
  s << x;
  return s.str();
}

CheckResult check_handshake(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x11};
  for (int t = 0; t < cfg.samples; ++t) {
    Graph g = random_unit_graph(rng, 2 + static_cast<int>(rng.below(9)), 0.4);
    long long deg = 0, mult = 0;
    for (int v = 0; v < g.order(); ++v) deg += g.degree(v);
    for (const auto& e : g.edges()) mult += e.mult;
    if (deg != 2 * mult) return {"handshake", false, "random graph violates handshake"};
  }
  for (auto [k, p] : {std::pair{4, 2}, {3, 1}, {5, 1}, {6, 2}}) {
    HYInstance inst = build_henning_yeo({.k = k, .p = p});
    long long deg = 0;
    for (int v = 0; v < inst.graph.order(); ++v) deg += inst.graph.degree(v);
    if (deg != 2LL * inst.graph.edge_count())
      return {"handshake", false, "construction violates handshake"};
  }
  return {"handshake", true, ""};
}

CheckResult check_neighbor_partition(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x22};
  for (int t = 0; t < cfg.samples; ++t) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng.below(6)));
    for (int id = 0; id < g.edge_count(); ++id) {
      const auto& e = g.edge(id);
      auto part = neighbor_partition(g, id);
      std::vector<char> in_u(g.order(), 0), in_v(g.order(), 0);
      for (auto [nb, eid] : g.neighbors(e.u)) in_u[nb] = 1;
      for (auto [nb, eid] : g.neighbors(e.v)) in_v[nb] = 1;
      std::vector<char> seen(g.order(), 0);
      for (int x : part.common) {
        if (!in_u[x] || !in_v[x] || seen[x]) return {"neighbor-partition", false, "common"};
        seen[x] = 1;
      }
      for (int x : part.only_u) {
        if (!in_u[x] || in_v[x] || seen[x] || x == e.v)
          return {"neighbor-partition", false, "only_u"};
        seen[x] = 1;
      }
      for (int x : part.only_v) {
        if (in_u[x] || !in_v[x] || seen[x] || x == e.u)
          return {"neighbor-partition", false, "only_v"};
        seen[x] = 1;
      }
      for (int x = 0; x < g.order(); ++x)
        if (!seen[x] && x != e.u && x != e.v && (in_u[x] || in_v[x]))
          return {"neighbor-partition", false, "coverage"};
    }
  }
  return {"neighbor-partition", true, ""};
}

CheckResult check_oracle_equivalence(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x33};
  double worst = 0;
  for (int t = 0; t < cfg.samples; ++t) {
    int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.max_n - 1)));
    Graph g = random_connected(rng, n);
    for (int rep = 0; rep < cfg.angle_sets; ++rep) {
      AngleAssignment a = random_angles(rng, g);
      StateVector s = build_state(g, a);
      for (int id = 0; id < g.edge_count(); ++id) {
        const auto& e = g.edge(id);
        worst = std::max(worst, std::abs(expect_qp(g, a, id) -
                                         pauli_pair_expectation(s, PauliPair::QP, e.u, e.v)));
        worst = std::max(worst, std::abs(expect_pq(g, a, id) -
                                         pauli_pair_expectation(s, PauliPair::PQ, e.u, e.v)));
        worst = std::max(worst, std::abs(expect_zz_exact(g, a, id) -
                                         pauli_pair_expectation(s, PauliPair::ZZ, e.u, e.v)));
      }
    }
  }
  return {"oracle-equivalence", worst <= 1e-9, "max deviation " + fmt(worst)};
}

CheckResult check_uniform_zz(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x44};
  double worst = 0;
  for (int t = 0; t < cfg.samples; ++t) {
    Graph g = random_connected(rng, 3 + static_cast<int>(rng.below(6)));
    AngleAssignment a = AngleAssignment::uniform(g, rng.uniform() * kPi4);
    for (int id = 0; id < g.edge_count(); ++id)
      worst = std::max(worst,
                       std::abs(expect_zz_exact(g, a, id) - expect_zz_uniform_t(g, a, id)));
  }
  return {"uniform-zz", worst <= 1e-12, "max deviation " + fmt(worst)};
}

CheckResult check_binomial_identity(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x55};
  double worst = 0;
  for (int t = 0; t <= 12; ++t) {
    for (int rep = 0; rep < 100; ++rep) {
      double theta = rng.uniform() * kPi4;
      double s2 = std::sin(2 * theta), c2 = std::cos(2 * theta);
      double sum = 0, coeff = 1;
      for (int s = 0; s <= t; ++s) {
        if (s % 2 == 0)
          sum += coeff * std::pow(s2, 2 * s) * std::pow(c2, 2 * (t - s));
        coeff = coeff * (t - s) / (s + 1);
      }
      double closed = 0.5 * (1 + std::pow(c2 * c2 - s2 * s2, t));
      worst = std::max(worst, std::abs(sum - closed));
    }
  }
  return {"binomial-identity", worst <= 1e-10, "max deviation " + fmt(worst)};
}

CheckResult check_matching_oracles(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x66};
  for (int t = 0; t < cfg.samples; ++t) {
    int n = 2 + static_cast<int>(rng.below(7));
    std::vector<GraphEdge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < 0.45)
          edges.push_back({u, v, 1, 1.0 + static_cast<double>(rng.below(9))});
    Graph g(n, std::move(edges));
    if (g.edge_count() > 12) continue;
    auto got = max_weight_matching(g);
    if (!is_valid_matching(g, got.edge_ids))
      return {"matching-oracle", false, "infeasible matching"};
    // exhaustive subset search
    long long best = 0;
    int m = g.edge_count();
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<char> used(n, 0);
      long long val = 0;
      bool ok = true;
      for (int id = 0; id < m && ok; ++id)
        if (mask >> id & 1) {
          const auto& e = g.edge(id);
          if (used[e.u] || used[e.v]) ok = false;
          used[e.u] = used[e.v] = 1;
          val += static_cast<long long>(e.weight);
        }
      if (ok) best = std::max(best, val);
    }
    if (got.value != Rational(best, 1))
      return {"matching-oracle", false, "value mismatch vs exhaustive search"};
    auto fm = max_weight_fractional_matching(g);
    if (!is_feasible_fractional(g, fm.fraction))
      return {"matching-oracle", false, "infeasible fractional matching"};
    if (fm.value < got.value) return {"matching-oracle", false, "relaxation dominated"};
  }
  return {"matching-oracle", true, ""};
}

CheckResult check_eigenvalue_bounds(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x77};
  for (int t = 0; t < cfg.eig_samples; ++t) {
    int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(cfg.eig_max_n - 1)));
    Graph g = random_unit_graph(rng, n, 0.5);
    if (g.edge_count() == 0) continue;
    double lam = max_eigenvalue(g);
    double w = g.total_weight();
    double fm = max_weight_fractional_matching(g).value.to_double();
    double mwm = max_weight_matching(g).value.to_double();
    if (lam > w + fm + 1e-7)
      return {"eigenvalue-bounds", false, "fractional matching bound violated"};
    if (lam > w + mwm + 1e-7)
      return {"eigenvalue-bounds", false,
              "matching bound violated: candidate counterexample, inspect manually"};
  }
  return {"eigenvalue-bounds", true, ""};
}

CheckResult check_variational(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x88};
  for (int t = 0; t < cfg.eig_samples; ++t) {
    int n = 2 + static_cast<int>(rng.below(7));
    Graph g = random_connected(rng, n);
    double lam = max_eigenvalue(g);
    for (int rep = 0; rep < 3; ++rep) {
      double e = epr_energy_exact(g, random_angles(rng, g));
      if (e > lam + 1e-7) return {"variational-bound", false, "state beats eigenvalue"};
    }
    auto fm = assign_fractions_edge_degree(g);
    double e = epr_energy_exact(g, angles_from_fractions(g, fm, 0.2406));
    if (e > lam + 1e-7)
      return {"variational-bound", false, "decay-rule state beats eigenvalue"};
  }
  return {"variational-bound", true, ""};
}

CheckResult check_angle_rule(const VerifyConfig& cfg) {
  Rng64 rng{cfg.seed ^ 0x99};
  double (*rule)(double, double) = cfg.angle_rule;
  if (!rule) rule = [](double kappa, double m) { return std::exp(-kappa * m); };
  Graph p3(3, {{0, 1, 1, 1.0}, {1, 2, 1, 1.0}});
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    double kappa = 0.01 + rng.uniform() * 2;
    FractionalMatching fm;
    fm.fraction = {rng.uniform(), rng.uniform() * 0.5};
    auto a = angles_from_fractions(p3, fm, kappa);
    for (int id = 0; id < 2; ++id)
      worst = std::max(worst,
                       std::abs(std::cos(2 * a.theta(id)) - rule(kappa, fm.fraction[id])));
  }
  return {"angle-rule", worst <= 1e-12, "max deviation " + fmt(worst)};
}

CheckResult check_bound_grid(const VerifyConfig&) {
  for (int i = 1; i <= 60; ++i)
    for (int j = 0; j <= 60; ++j) {
      double kappa = i * 0.05, m = j / 60.0;
      if (edge_bound(kappa, m) > 1 + m + 1e-12)
        return {"bound-grid", false, "T exceeds 1+m"};
      if (edge_ratio(kappa, m) > 1 + 1e-12) return {"bound-grid", false, "R exceeds 1"};
    }
  return {"bound-grid", true, ""};
}

CheckResult check_hy_structure(const VerifyConfig&) {
  for (auto [k, p] : {std::pair{4, 2}, {4, 3}, {6, 2}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    HYInstance inst = build_henning_yeo({.k = k, .p = p});
    if (inst.graph.order() != hy_order(k, p)) return {"hy-structure", false, "order"};
    if (!inst.graph.is_regular(k)) return {"hy-structure", false, "regularity"};
    if (!odd_components_after_scaffold_deletion(inst))
      return {"hy-structure", false, "odd components"};
  }
  return {"hy-structure", true, ""};
}

}  // namespace

VerifyReport run_verification(const VerifyConfig& cfg) {
  VerifyReport report;
  report.checks.push_back(check_handshake(cfg));
  report.checks.push_back(check_neighbor_partition(cfg));
  report.checks.push_back(check_oracle_equivalence(cfg));
  report.checks.push_back(check_uniform_zz(cfg));
  report.checks.push_back(check_binomial_identity(cfg));
  report.checks.push_back(check_matching_oracles(cfg));
  report.checks.push_back(check_eigenvalue_bounds(cfg));
  report.checks.push_back(check_variational(cfg));
  report.checks.push_back(check_angle_rule(cfg));
  report.checks.push_back(check_bound_grid(cfg));
  report.checks.push_back(check_hy_structure(cfg));
  return report;
}

}  // namespace apsbench
