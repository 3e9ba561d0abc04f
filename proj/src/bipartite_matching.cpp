#include "apsbench/bipartite_matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace apsbench {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

BipartiteMatcher::BipartiteMatcher(int left, int right) : nl_(left), nr_(right) {
  if (left < 0 || right < 0) throw std::invalid_argument("bipartite: negative size");
  adj_.assign(nl_, {});
  mate_left_.assign(nl_, -1);
  mate_right_.assign(nr_, -1);
}

void BipartiteMatcher::set_edge(int u, int v, long long w) {
  if (u < 0 || u >= nl_ || v < 0 || v >= nr_)
    throw std::invalid_argument("bipartite: bad edge");
  if (w < 0) throw std::invalid_argument("bipartite: negative weight");
  for (auto& [tv, tw] : adj_[u])
    if (tv == v) {
      tw = std::max(tw, w);
      return;
    }
  adj_[u].push_back({v, w});
}

// Nodes: left 0..nl-1, right nl..nl+nr-1. Arc costs are -w forward
// (adding an edge) and +w backward (removing the matched edge); reduced
// costs stay non-negative under the potential p. Each round augments along
// the cheapest path from any free left vertex to a free right vertex and
// stops once the cheapest path no longer has negative true cost.
long long BipartiteMatcher::solve() {
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  int tot = nl_ + nr_;
  std::vector<long long> p(tot, 0), dist(tot);
  std::vector<int> parent(tot);  // for right: the left it was reached from; for left: its mate
  long long wmax = 0;
  for (const auto& a : adj_)
    for (const auto& [v, w] : a) wmax = std::max(wmax, w);
  for (int u = 0; u < nl_; ++u) p[u] = wmax;

  using Item = std::pair<long long, int>;
  for (;;) {
    long long source_pot = -kInf;
    for (int u = 0; u < nl_; ++u)
      if (mate_left_[u] < 0) source_pot = std::max(source_pot, p[u]);
    if (source_pot == -kInf) break;

    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int u = 0; u < nl_; ++u)
      if (mate_left_[u] < 0) {
        dist[u] = source_pot - p[u];
        pq.push({dist[u], u});
      }
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d != dist[x]) continue;
      if (x < nl_) {
        for (const auto& [v, w] : adj_[x]) {
          if (mate_left_[x] == v) continue;
          long long nd = d + (-w + p[x] - p[nl_ + v]);
          if (nd < dist[nl_ + v]) {
            dist[nl_ + v] = nd;
            parent[nl_ + v] = x;
            pq.push({nd, nl_ + v});
          }
        }
      } else {
        int v = x - nl_;
        int u = mate_right_[v];
        if (u >= 0) {
          long long w = 0;
          for (const auto& [tv, tw] : adj_[u])
            if (tv == v) w = tw;
          long long nd = d + (w + p[x] - p[u]);
          if (nd < dist[u]) {
            dist[u] = nd;
            parent[u] = v;
            pq.push({nd, u});
          }
        }
      }
    }

    int best = -1;
    long long best_true = 0;  // only a strictly negative true cost improves
    for (int v = 0; v < nr_; ++v)
      if (mate_right_[v] < 0 && dist[nl_ + v] < kInf) {
        long long true_cost = dist[nl_ + v] + p[nl_ + v] - source_pot;
        if (true_cost < best_true) {
          best_true = true_cost;
          best = v;
        }
      }
    if (best < 0) break;

    // cap unreached nodes at dcap as well, otherwise arcs leaving the
    // unreached set can end up with negative reduced cost in later rounds
    long long dcap = dist[nl_ + best];
    for (int x = 0; x < tot; ++x) p[x] += std::min(dist[x], dcap);

    // walk back: right <- left <- right ... <- free left
    int v = best;
    for (;;) {
      int u = parent[nl_ + v];
      int prev_v = parent[u];  // right vertex u was reached from, or -1 at a free left
      mate_left_[u] = v;
      mate_right_[v] = u;
      if (prev_v < 0) break;
      v = prev_v;
    }
  }

  long long total = 0;
  pairs_.clear();
  for (int u = 0; u < nl_; ++u)
    if (mate_left_[u] >= 0) {
      long long w = 0;
      for (const auto& [tv, tw] : adj_[u])
        if (tv == mate_left_[u]) w = tw;
      if (w > 0) {
        total += w;
        pairs_.push_back({u, mate_left_[u]});
      } else {
        mate_right_[mate_left_[u]] = -1;
        mate_left_[u] = -1;
      }
    }
  return total;
}

}  // namespace apsbench
