#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "apsbench/bipartite_matching.hpp"
#include "apsbench/blossom.hpp"
#include "apsbench/graph.hpp"
#include "apsbench/matching.hpp"
#include "test_support.hpp"

using namespace apsbench;
using apsbench::testing::Rng;

namespace {

// oracle: exhaustive search over edge subsets, lexicographically smallest
// optimal edge-id set
struct BruteResult {
  long long value = 0;
  std::vector<int> ids;
};

BruteResult brute_mwm(const Graph& g, const std::vector<long long>& w) {
  BruteResult best;
  int m = g.edge_count();
  std::vector<int> chosen;
  std::vector<char> used(g.order(), 0);
  auto rec = [&](auto&& self, int id, long long acc) -> void {
    if (id == m) {
      if (acc > best.value ||
          (acc == best.value && !best.ids.empty() && chosen < best.ids)) {
        best.value = acc;
        best.ids = chosen;
      }
      return;
    }
    self(self, id + 1, acc);
    const auto& e = g.edge(id);
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      chosen.push_back(id);
      self(self, id + 1, acc + w[id]);
      chosen.pop_back();
      used[e.u] = used[e.v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

// oracle: enumerate all {0, 1/2, 1} fractional assignments (half-integral
// optimum always exists); value doubled to stay integral
long long brute_mwfm_doubled(const Graph& g, const std::vector<long long>& w) {
  int m = g.edge_count();
  std::vector<int> f(m, 0);
  long long best = 0;
  auto feasible = [&]() {
    std::vector<int> sum(g.order(), 0);
    for (int id = 0; id < m; ++id) {
      sum[g.edge(id).u] += f[id];
      sum[g.edge(id).v] += f[id];
    }
    for (int s : sum)
      if (s > 2) return false;
    return true;
  };
  auto rec = [&](auto&& self, int id) -> void {
    if (id == m) {
      if (!feasible()) return;
      long long v = 0;
      for (int i = 0; i < m; ++i) v += w[i] * f[i];
      best = std::max(best, v);
      return;
    }
    for (int c : {0, 1, 2}) {
      f[id] = c;
      self(self, id + 1);
    }
    f[id] = 0;
  };
  rec(rec, 0);
  return best;
}

}  // namespace

TEST_CASE("mwm trivial examples") {
  Graph k3(3, {{0, 1, 1, 1.0}, {1, 2, 1, 1.0}, {0, 2, 1, 1.0}});
  auto m = max_weight_matching(k3);
  CHECK(m.value == Rational(1, 1));
  CHECK(m.edge_ids.size() == 1);

  Graph c4(4, {{0, 1, 1, 1.0}, {1, 2, 1, 1.0}, {2, 3, 1, 1.0}, {3, 0, 1, 1.0}});
  auto m2 = max_weight_matching(c4);
  CHECK(m2.value == Rational(2, 1));
  CHECK(is_valid_matching(c4, m2.edge_ids));

  CHECK(max_weight_matching(Graph(3, {})).value == Rational(0, 1));
}

TEST_CASE("mwfm trivial examples") {
  Graph k3(3, {{0, 1, 1, 1.0}, {1, 2, 1, 1.0}, {0, 2, 1, 1.0}});
  auto fm = max_weight_fractional_matching(k3);
  CHECK(fm.value == Rational(3, 2));
  CHECK(is_feasible_fractional(k3, fm.fraction));

  Graph p3(3, {{0, 1, 1, 1.0}, {1, 2, 1, 1.0}});
  auto fm2 = max_weight_fractional_matching(p3);
  CHECK(fm2.value == Rational(1, 1));
}

TEST_CASE("blossom agrees with brute force on random graphs") {
  Rng rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + static_cast<int>(rng.below(8));  // up to 9
    Graph g = apsbench::testing::random_graph(rng, n, 0.45, trial % 2 == 0);
    if (g.edge_count() > 12) continue;
    auto [w, scale] = integerize_weights(g);
    auto oracle = brute_mwm(g, w);
    auto got = max_weight_matching(g);
    CHECK(got.value == Rational(oracle.value, scale));
    CHECK(is_valid_matching(g, got.edge_ids));
    // verify the reported edge set really attains the value
    long long sum = 0;
    for (int id : got.edge_ids) sum += w[id];
    CHECK(Rational(sum, scale) == got.value);
  }
}

TEST_CASE("mwfm agrees with half-integral enumeration") {
  Rng rng(99);
  int done = 0;
  for (int trial = 0; trial < 200 && done < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(6));
    Graph g = apsbench::testing::random_graph(rng, n, 0.5, true, 9);
    if (g.edge_count() > 10 || g.edge_count() == 0) continue;
    ++done;
    auto [w, scale] = integerize_weights(g);
    long long oracle2 = brute_mwfm_doubled(g, w);
    auto got = max_weight_fractional_matching(g);
    CHECK(got.value == Rational(oracle2, 2 * scale));
    CHECK(is_feasible_fractional(g, got.fraction));
    // fractions are half-integral and attain the value
    double val = 0;
    for (int id = 0; id < g.edge_count(); ++id) {
      bool half_integral = got.fraction[id] == 0.0 || got.fraction[id] == 0.5 ||
                           got.fraction[id] == 1.0;
      CHECK(half_integral);
      val += got.fraction[id] * g.edge(id).weight;
    }
    CHECK(std::abs(val - got.value.to_double()) < 1e-9);
  }
  CHECK(done >= 50);
}

TEST_CASE("lp dominance: matching <= fractional matching") {
  Rng rng(555);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(10));
    Graph g = apsbench::testing::random_graph(rng, n, 0.4, false);
    auto m = max_weight_matching(g);
    auto fm = max_weight_fractional_matching(g);
    CHECK(m.value <= fm.value);
  }
}

TEST_CASE("bipartite solver agrees with blossom on bipartite instances") {
  Rng rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    int nl = 1 + static_cast<int>(rng.below(6));
    int nr = 1 + static_cast<int>(rng.below(6));
    BipartiteMatcher bp(nl, nr);
    BlossomMatcher bl(nl + nr);
    for (int u = 0; u < nl; ++u)
      for (int v = 0; v < nr; ++v)
        if (rng.uniform() < 0.5) {
          long long w = 1 + static_cast<long long>(rng.below(30));
          bp.set_edge(u, v, w);
          bl.set_edge(u, nl + v, w);
        }
    CHECK(bp.solve() == bl.solve());
  }
}

TEST_CASE("tight bound closed forms") {
  CHECK(tight_bound(4, 22) == Rational(10, 1));
  CHECK(tight_bound_value(4, 22) == doctest::Approx(10.0));
  // k=10: ratio to n/2 is 104/112
  auto [m10, mhat10] = matching_ratios(10, 504);
  CHECK(m10 == doctest::Approx(104.0 / 112.0).epsilon(1e-12));
  CHECK(mhat10 == doctest::Approx(0.9935).epsilon(1e-3));
  // k=3 large n: ratio tends to 16/18
  auto [m3, mhat3] = matching_ratios(3, 502);
  CHECK(m3 == doctest::Approx(0.889).epsilon(2e-3));
  CHECK(mhat3 == doctest::Approx(0.972).epsilon(1e-3));
  CHECK_THROWS(tight_bound(2, 10));
  CHECK_THROWS(tight_bound(1, 10));
}

TEST_CASE("weighted ratios reduce to unweighted at d_w = 1") {
  Rng rng(77);
  Graph g = apsbench::testing::random_graph(rng, 8, 0.5, true, 1);  // all weights 1
  auto r = weighted_matching_ratios(g);
  auto m = max_weight_matching(g);
  auto fm = max_weight_fractional_matching(g);
  CHECK(r.mwm == m.value);
  CHECK(r.mwfm == fm.value);
}

TEST_CASE("optimal values are invariant under vertex relabeling") {
  Rng rng(2718);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 20 + static_cast<int>(rng.below(40));
    Graph g = apsbench::testing::random_graph(rng, n, 3.0 / n, true, 50);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
    std::vector<GraphEdge> relabeled = g.edges();
    for (auto& e : relabeled) {
      e.u = perm[e.u];
      e.v = perm[e.v];
    }
    Graph h(n, std::move(relabeled));
    CHECK(max_weight_matching(g).value == max_weight_matching(h).value);
    CHECK(max_weight_fractional_matching(g).value ==
          max_weight_fractional_matching(h).value);
  }
}

TEST_CASE("integerize_weights handles small rationals") {
  Graph g(4, {{0, 1, 1, 0.5}, {1, 2, 1, 1.0 / 3.0}, {2, 3, 1, 2.5}});
  auto [w, scale] = integerize_weights(g);
  CHECK(scale == 6);
  CHECK(w == std::vector<long long>{3, 2, 15});
}

TEST_CASE("multigraph matching uses the heaviest parallel edge") {
  Graph g(2, {{0, 1, 1, 1.0}, {0, 1, 1, 3.0}, {0, 1, 1, 2.0}});
  auto m = max_weight_matching(g);
  CHECK(m.value == Rational(3, 1));
  REQUIRE(m.edge_ids.size() == 1);
  CHECK(m.edge_ids[0] == 1);
  auto fm = max_weight_fractional_matching(g);
  CHECK(fm.value == Rational(3, 1));
}
