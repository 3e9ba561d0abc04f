#pragma once

#include <utility>
#include <vector>

namespace apsbench {

/// Exact maximum-weight matching on a bipartite graph (no cardinality
/// constraint) by successive shortest augmenting paths with Johnson
/// potentials. Non-negative integer weights; sparse; deterministic.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right);

  /// Keeps the heavier edge if (u,v) is set twice.
  void set_edge(int left_u, int right_v, long long w);

  long long solve();

  /// Matched right partner of left vertex, or -1.
  int mate_of_left(int u) const { return mate_left_[u]; }
  const std::vector<std::pair<int, int>>& matched_pairs() const { return pairs_; }

 private:
  int nl_, nr_;
  std::vector<std::vector<std::pair<int, long long>>> adj_;  // left -> (right, w)
  std::vector<int> mate_left_, mate_right_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace apsbench
