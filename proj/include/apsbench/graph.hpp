#pragma once

#include <span>
#include <string>
#include <vector>

namespace apsbench {

struct GraphEdge {
  int u = 0;
  int v = 0;
  int mult = 1;
  double weight = 1.0;
};

/// Weighted undirected multigraph on dense vertices 0..n-1.
/// Immutable after construction; edge ids are insertion order and are the
/// stable handle used for angles, fractions and matchings everywhere else.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<GraphEdge> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int id) const;

  /// Multiplicity-weighted degree.
  int degree(int v) const;

  /// d_ij = max of the two endpoint degrees.
  int edge_degree(int id) const;

  /// Sum of mult * weight over stored edges.
  double total_weight() const;

  /// (neighbor, edge id) pairs sorted by neighbor id; parallel edges appear
  /// once per stored record.
  std::span<const std::pair<int, int>> neighbors(int v) const;

  /// First stored edge id joining u and v, or -1.
  int find_edge(int u, int v) const;

  /// True if every stored edge has mult 1 and no two records join the same pair.
  bool is_simple() const { return simple_; }

  /// True if all vertex degrees equal k.
  bool is_regular(int k) const;

 private:
  int n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::pair<int, int>> adj_flat_;  // (neighbor, edge id)
  std::vector<int> adj_start_;                 // size n_+1
  bool simple_ = true;
};

/// T / K-tilde / L-tilde split of the neighborhoods around one edge.
/// common = vertices adjacent to both endpoints, only_u / only_v the
/// exclusive remainders. All three sorted ascending.
struct NeighborPartition {
  std::vector<int> common;
  std::vector<int> only_u;
  std::vector<int> only_v;
};

/// Requires multiplicity 1 on every edge incident to either endpoint.
NeighborPartition neighbor_partition(const Graph& g, int edge_id);

/// Merge parallel records and fold multiplicity into the weight
/// (mult m, weight w becomes one edge of weight m*w). Edge ids are
/// renumbered in first-occurrence order.
Graph collapse_multigraph(const Graph& g);

}  // namespace apsbench
