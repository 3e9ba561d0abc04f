#include "apsbench/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "apsbench/bipartite_matching.hpp"
#include "apsbench/blossom.hpp"

namespace apsbench {

namespace {

// continued-fraction rational approximation with denominator cap
bool to_rational(double x, long long max_den, long long& num, long long& den) {
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    if (fl > 4e18 || fl < -4e18) return false;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    double rem = v - fl;
    if (std::abs(static_cast<double>(p1) / q1 - x) < 1e-12 * std::max(1.0, std::abs(x)))
      break;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  num = p1;
  den = q1;
  return std::abs(static_cast<double>(num) / den - x) <= 1e-9 * std::max(1.0, std::abs(x));
}

}  // namespace

std::pair<std::vector<long long>, long long> integerize_weights(const Graph& g) {
  long long scale = 1;
  for (const auto& e : g.edges()) {
    long long num, den;
    if (!to_rational(e.weight, 1000000, num, den))
      throw std::invalid_argument("matching: weight is not a small rational");
    long long gcd = std::gcd(scale, den);
    if (scale > 2000000000LL / (den / gcd))
      throw std::invalid_argument("matching: weight denominators overflow the scale");
    scale = scale / gcd * den;
  }
  std::vector<long long> w;
  w.reserve(g.edge_count());
  for (const auto& e : g.edges()) w.push_back(std::llround(e.weight * scale));
  return {std::move(w), scale};
}

Matching max_weight_matching(const Graph& g) {
  auto [iw, scale] = integerize_weights(g);
  BlossomMatcher bm(g.order());
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    bm.set_edge(e.u, e.v, iw[id]);
  }
  long long total = bm.solve();
  Matching out;
  out.value = Rational(total, scale);
  for (const auto& [u, v] : bm.matched_pairs()) {
    // recover the heaviest stored edge for the matched pair, lowest id wins
    int pick = -1;
    long long best = -1;
    for (const auto& [nb, id] : g.neighbors(u))
      if (nb == v && iw[id] > best) {
        best = iw[id];
        pick = id;
      }
    out.edge_ids.push_back(pick);
  }
  std::sort(out.edge_ids.begin(), out.edge_ids.end());
  return out;
}

FractionalMatching max_weight_fractional_matching(const Graph& g) {
  auto [iw, scale] = integerize_weights(g);
  int n = g.order();
  // double cover: edge (u,v) becomes (u+, v-) and (v+, u-)
  BipartiteMatcher bm(n, n);
  std::map<std::pair<int, int>, std::pair<long long, int>> heaviest;  // (w, id)
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    auto key = std::minmax(e.u, e.v);
    auto it = heaviest.find(key);
    if (it == heaviest.end() || iw[id] > it->second.first)
      heaviest[key] = {iw[id], id};
  }
  for (const auto& [key, wid] : heaviest) {
    bm.set_edge(key.first, key.second, wid.first);
    bm.set_edge(key.second, key.first, wid.first);
  }
  long long doubled = bm.solve();
  FractionalMatching out;
  out.value = Rational(doubled, 2 * scale);
  out.fraction.assign(g.edge_count(), 0.0);
  for (const auto& [up, vm] : bm.matched_pairs()) {
    auto key = std::minmax(up, vm);
    out.fraction[heaviest.at(key).second] += 0.5;
  }
  return out;
}

Rational tight_bound(int k, long long n) {
  if (k % 2 == 0) {
    if (k < 4) throw std::invalid_argument("tight_bound: even k must be >= 4");
    // (k^2+4)/(k^2+k+2) * n/2
    return Rational(static_cast<long long>(k) * k * n + 4 * n,
                    2LL * (static_cast<long long>(k) * k + k + 2));
  }
  if (k < 3) throw std::invalid_argument("tight_bound: odd k must be >= 3");
  long long k3 = static_cast<long long>(k) * k * k;
  return Rational((k3 - static_cast<long long>(k) * k - 2) * n - 2 * k + 2,
                  2 * (k3 - 3 * k));
}

double tight_bound_value(int k, long long n) { return tight_bound(k, n).to_double(); }

std::pair<double, double> matching_ratios(int k, long long n) {
  double m = tight_bound_value(k, n);
  double m_k = m / (n / 2.0);
  double size = static_cast<double>(k * n / 2);  // floor(kn/2)
  double mhat = (size + m) / (size + n / 2.0);
  return {m_k, mhat};
}

WeightedMatchingRatios weighted_matching_ratios(const Graph& g) {
  WeightedMatchingRatios out;
  out.mwm = max_weight_matching(g).value;
  out.mwfm = max_weight_fractional_matching(g).value;
  out.total_weight = g.total_weight();
  out.m_w = out.mwm.to_double() / out.mwfm.to_double();
  out.mhat_w =
      (out.total_weight + out.mwm.to_double()) / (out.total_weight + out.mwfm.to_double());
  return out;
}

bool is_valid_matching(const Graph& g, const std::vector<int>& edge_ids) {
  std::vector<char> used(g.order(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= g.edge_count()) return false;
    const auto& e = g.edge(id);
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

bool is_feasible_fractional(const Graph& g, const std::vector<double>& fraction,
                            double tol) {
  if (static_cast<int>(fraction.size()) != g.edge_count()) return false;
  for (double f : fraction)
    if (f < -tol || f > 1 + tol) return false;
  std::vector<double> sum(g.order(), 0.0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    sum[e.u] += e.mult * fraction[id];
    sum[e.v] += e.mult * fraction[id];
  }
  for (double s : sum)
    if (s > 1 + tol) return false;
  return true;
}

}  // namespace apsbench
