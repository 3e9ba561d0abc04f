#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace apsbench {

/// Exact maximum-weight matching on general graphs, O(n^3) blossom
/// algorithm with dual variables and slack tracking over an adjacency
/// matrix. Weights must be non-negative integers; absent edges are 0.
/// Deterministic: processing order is fixed by vertex index.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(int n);

  /// Keeps the heavier edge if (u,v) is set twice.
  void set_edge(int u, int v, long long w);

  /// Returns total weight; mate() is valid afterwards.
  long long solve();

  /// Matched partner of v, or -1.
  int mate(int v) const;

  const std::vector<std::pair<int, int>>& matched_pairs() const { return pairs_; }

 private:
  struct Edge {
    int u = 0, v = 0;
    long long w = 0;
  };

  long long delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }
  void update_slack(int u, int x);
  void set_slack(int x);
  void push_queue(int x);
  void set_root(int x, int b);
  int blossom_position(int b, int xr);
  void set_match(int u, int v);
  void augment(int u, int v);
  int lowest_common_ancestor(int u, int v);
  void add_blossom(int u, int lca, int v);
  void expand_blossom(int b);
  bool on_edge(const Edge& e);
  bool augment_round();

  int n_ = 0;
  int node_count_ = 0;  // vertices plus live blossom nodes
  std::vector<std::vector<Edge>> g_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, root_, parent_, color_, visit_;
  std::vector<std::vector<int>> members_, member_of_;
  std::vector<int> queue_;
  size_t queue_head_ = 0;
  int visit_stamp_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace apsbench
