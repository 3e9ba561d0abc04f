// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any fails. Reference values are the published table entries; tolerances
// and runtime budgets are enforced as stated.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "apsbench/energy.hpp"
#include "apsbench/fed.hpp"
#include "apsbench/henning_yeo.hpp"
#include "apsbench/matching.hpp"
#include "apsbench/statevector.hpp"
#include "apsbench/verify.hpp"

using namespace apsbench;

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

int failures = 0;

struct Criterion {
  int id;
  const char* label;
  double budget_s;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void finish() {
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count();
    if (budget_s > 0 && elapsed > budget_s) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  criterion %2d: %s  (%.2fs%s%s)\n", ok ? "PASS" : "FAIL", id, label,
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// published reference entries
struct TableIRow {
  int k;
  double r, kappa;
};
const std::vector<TableIRow> kTableI = {
    {2, .872, .324}, {3, .894, .203},  {4, .912, .147}, {5, .924, .115}, {6, .934, .0945},
    {7, .942, .080}, {8, .948, .0692}, {9, .953, .061}, {10, .957, .0544}};

struct TableIIRow {
  int k;
  double m, mhat;
};
const std::vector<TableIIRow> kTableII = {{3, .889, .972},  {4, .909, .982}, {5, .891, .982},
                                          {6, .909, .987},  {7, .907, .988}, {8, .919, .991},
                                          {9, .92, .992},   {10, .9286, .9935}};

struct TableIIIRow {
  int k;
  double rhat;
};
const std::vector<TableIIIRow> kTableIII = {{3, .894}, {4, .914}, {5, .926},  {6, .937},
                                            {7, .944}, {8, .950}, {9, .954},  {10, .9586}};

struct TableIVRow {
  int k;
  double rhat_w, mhat_w;
};
const std::vector<TableIVRow> kTableIV = {{3, .888, .952},  {4, .909, .962}, {5, .925, .977},
                                          {6, .936, .980},  {7, .943, .986}, {8, .949, .988},
                                          {9, .954, .991},  {10, .958, .992}};

}  // namespace

int main() {
  FedConfig fed_cfg;

  // shared per-k results reused by the gap criterion
  std::vector<double> rhat_unweighted(11, 0), mhat_unweighted(11, 0);
  std::vector<double> rhat_weighted(11, 0), mhat_weighted(11, 0);

  {
    Criterion c{1, "single-fraction ratio table (r_k, kappa_k), k=2..10", 5.0};
    for (const auto& row : kTableI) {
      auto got = regular_ratio(row.k, fed_cfg);
      c.expect(std::abs(got.value - row.r) <= 1e-3,
               "r_" + std::to_string(row.k) + "=" + fmt(got.value));
      c.expect(std::abs(got.kappa - row.kappa) <= 2e-3,
               "kappa_" + std::to_string(row.k) + "=" + fmt(got.kappa));
    }
    c.finish();
  }

  {
    Criterion c{2, "full max-min constants (half golden ratio)", 5.0};
    auto r0 = maxmin_ratio(fed_cfg);
    const double phi = (1 + std::sqrt(5.0)) / 2;
    c.expect(std::abs(r0.value - phi / 2) < 1e-5, "r0=" + fmt(r0.value));
    c.expect(std::abs(r0.kappa - 0.5 * std::log(phi)) < 1e-5, "kappa0=" + fmt(r0.kappa));
    c.finish();
  }

  {
    Criterion c{3, "matching-ratio table (m_k, mhat_k), k=3..10", 1.0};
    for (const auto& row : kTableII) {
      int p = smallest_p_for_order(row.k, 500);
      long long n = hy_order(row.k, p);
      auto [m_k, mhat] = matching_ratios(row.k, n);
      c.expect(std::abs(m_k - row.m) <= 1e-3, "m_" + std::to_string(row.k) + "=" + fmt(m_k));
      c.expect(std::abs(mhat - row.mhat) <= 1e-3,
               "mhat_" + std::to_string(row.k) + "=" + fmt(mhat));
    }
    c.finish();
  }

  {
    Criterion c{4, "construction tightness: exact matchings on k=3..6 instances", 120.0};
    for (int k : {3, 4, 5, 6}) {
      int p = smallest_p_for_order(k, 500);
      HYInstance inst = build_henning_yeo({.k = k, .p = p});
      long long n = inst.graph.order();
      c.expect(n <= 600, "order too large");
      auto mwm = max_weight_matching(inst.graph);
      c.expect(mwm.value == tight_bound(k, n),
               "k=" + std::to_string(k) + " matching " + mwm.value.str());
      auto mwfm = max_weight_fractional_matching(inst.graph);
      c.expect(mwfm.value == Rational(n, 2),
               "k=" + std::to_string(k) + " fractional " + mwfm.value.str());
    }
    c.finish();
  }

  {
    Criterion c{5, "improved ratios rhat_k, k=3..10", 120.0};
    for (const auto& row : kTableIII) {
      int p = smallest_p_for_order(row.k, 500);
      HYInstance inst = build_henning_yeo({.k = row.k, .p = p});
      auto ir = improved_ratio(inst, fed_cfg);
      rhat_unweighted[row.k] = ir.ratio;
      mhat_unweighted[row.k] = matching_ratios(row.k, inst.graph.order()).second;
      c.expect(std::abs(ir.ratio - row.rhat) <= 2e-3,
               "rhat_" + std::to_string(row.k) + "=" + fmt(ir.ratio));
    }
    c.finish();
  }

  {
    Criterion c{6, "weighted ratios rhat_w, mhat_w at d_w=10, k=3..10", 300.0};
    for (const auto& row : kTableIV) {
      int p = smallest_p_for_order(row.k, 200);
      HYInstance inst =
          build_henning_yeo({.k = row.k, .p = p, .weights = {{10.0, 1.0}}});
      auto ratios = weighted_matching_ratios(inst.graph);
      auto fed = weighted_fed(inst, fed_cfg);
      rhat_weighted[row.k] = fed.ratio;
      mhat_weighted[row.k] = ratios.mhat_w;
      c.expect(std::abs(fed.ratio - row.rhat_w) <= 5e-3,
               "rhat_w_" + std::to_string(row.k) + "=" + fmt(fed.ratio));
      c.expect(std::abs(ratios.mhat_w - row.mhat_w) <= 5e-3,
               "mhat_w_" + std::to_string(row.k) + "=" + fmt(ratios.mhat_w));
    }
    c.finish();
  }

  {
    Criterion c{7, "closed forms vs state vector on 500 random graphs", 300.0};
    Rng64 rng{0xACCE97ull};
    double worst = 0;
    for (int trial = 0; trial < 500; ++trial) {
      int n = 2 + static_cast<int>(rng.below(6));  // 2..7
      std::vector<GraphEdge> edges;
      std::vector<std::vector<char>> have(n, std::vector<char>(n, 0));
      for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(v));
        edges.push_back({u, v, 1, 1.0});
        have[u][v] = have[v][u] = 1;
      }
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!have[u][v] && rng.uniform() < 0.35) edges.push_back({u, v, 1, 1.0});
      Graph g(n, std::move(edges));
      for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> theta(g.edge_count());
        for (auto& t : theta) t = rng.uniform() * kPi4;
        AngleAssignment a(theta);
        StateVector s = build_state(g, a);
        for (int id = 0; id < g.edge_count(); ++id) {
          const auto& e = g.edge(id);
          worst = std::max(
              worst, std::abs(expect_qp(g, a, id) -
                              pauli_pair_expectation(s, PauliPair::QP, e.u, e.v)));
          worst = std::max(
              worst, std::abs(expect_pq(g, a, id) -
                              pauli_pair_expectation(s, PauliPair::PQ, e.u, e.v)));
          worst = std::max(
              worst, std::abs(expect_zz_exact(g, a, id) -
                              pauli_pair_expectation(s, PauliPair::ZZ, e.u, e.v)));
        }
      }
    }
    c.expect(worst <= 1e-9, "max deviation " + fmt(worst));
    c.finish();
  }

  {
    Criterion c{8, "eigenvalue bounds on 200 random graphs (order <= 10)", 600.0};
    Rng64 rng{0xB0B0ull};
    int tested = 0;
    for (int trial = 0; tested < 200; ++trial) {
      int n = 2 + static_cast<int>(rng.below(9));  // 2..10
      std::vector<GraphEdge> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.uniform() < 0.5) edges.push_back({u, v, 1, 1.0});
      if (edges.empty()) continue;
      Graph g(n, std::move(edges));
      ++tested;
      double lam = max_eigenvalue(g);
      double w = g.total_weight();
      double fm = max_weight_fractional_matching(g).value.to_double();
      double mwm = max_weight_matching(g).value.to_double();
      c.expect(lam <= w + fm + 1e-7, "fractional bound violated at trial " +
                                          std::to_string(trial));
      c.expect(lam <= w + mwm + 1e-7,
               "matching bound violated at trial " + std::to_string(trial));
      if (!c.ok) break;
    }
    c.finish();
  }

  {
    Criterion c{9, "conjecture gaps positive and shrinking, k=3..10", 60.0};
    for (int k = 3; k <= 10; ++k) {
      double gap_u = mhat_unweighted[k] - rhat_unweighted[k];
      double gap_w = mhat_weighted[k] - rhat_weighted[k];
      c.expect(gap_u > 0, "unweighted gap k=" + std::to_string(k) + " = " + fmt(gap_u));
      c.expect(gap_w > 0, "weighted gap k=" + std::to_string(k) + " = " + fmt(gap_w));
      c.expect(gap_w < gap_u,
               "gap did not shrink at k=" + std::to_string(k));
    }
    c.finish();
  }

  {
    Criterion c{10, "property suites (invariants, identities, bounds)", 300.0};
    VerifyConfig cfg;
    cfg.samples = 80;
    cfg.eig_samples = 25;
    VerifyReport report = run_verification(cfg);
    for (const auto& check : report.checks)
      c.expect(check.pass, check.name + (check.detail.empty() ? "" : ": " + check.detail));
    c.finish();
  }

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
