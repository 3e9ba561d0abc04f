#include "apsbench/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace apsbench {

Graph::Graph(int n, std::vector<GraphEdge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph: negative order");
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("graph: endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (e.mult < 1) throw std::invalid_argument("graph: multiplicity < 1");
    if (!(e.weight > 0.0)) throw std::invalid_argument("graph: non-positive weight");
  }
  std::vector<int> count(n_ + 1, 0);
  for (const auto& e : edges_) {
    ++count[e.u];
    ++count[e.v];
  }
  adj_start_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adj_start_[v + 1] = adj_start_[v] + count[v];
  adj_flat_.resize(adj_start_[n_]);
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const auto& e = edges_[id];
    adj_flat_[fill[e.u]++] = {e.v, id};
    adj_flat_[fill[e.v]++] = {e.u, id};
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_flat_.begin() + adj_start_[v], adj_flat_.begin() + adj_start_[v + 1]);
  simple_ = true;
  for (const auto& e : edges_)
    if (e.mult != 1) simple_ = false;
  if (simple_) {
    for (int v = 0; v < n_ && simple_; ++v) {
      auto nb = neighbors(v);
      for (size_t i = 1; i < nb.size(); ++i)
        if (nb[i].first == nb[i - 1].first) simple_ = false;
    }
  }
}

const GraphEdge& Graph::edge(int id) const {
  if (id < 0 || id >= edge_count()) throw std::out_of_range("graph: bad edge id");
  return edges_[id];
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("graph: bad vertex");
  int d = 0;
  for (const auto& [nb, id] : neighbors(v)) {
    (void)nb;
    d += edges_[id].mult;
  }
  return d;
}

int Graph::edge_degree(int id) const {
  const auto& e = edge(id);
  return std::max(degree(e.u), degree(e.v));
}

double Graph::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.mult * e.weight;
  return s;
}

std::span<const std::pair<int, int>> Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("graph: bad vertex");
  return {adj_flat_.data() + adj_start_[v],
          static_cast<size_t>(adj_start_[v + 1] - adj_start_[v])};
}

int Graph::find_edge(int u, int v) const {
  int best = -1;
  for (const auto& [nb, id] : neighbors(u))
    if (nb == v && (best == -1 || id < best)) best = id;
  return best;
}

bool Graph::is_regular(int k) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != k) return false;
  return true;
}

NeighborPartition neighbor_partition(const Graph& g, int edge_id) {
  const auto& e = g.edge(edge_id);
  for (int endpoint : {e.u, e.v}) {
    auto nb = g.neighbors(endpoint);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (g.edge(nb[i].second).mult != 1 || (i > 0 && nb[i].first == nb[i - 1].first))
        throw std::invalid_argument("neighbor_partition: multigraph near edge");
    }
  }
  NeighborPartition out;
  auto nu = g.neighbors(e.u);
  auto nv = g.neighbors(e.v);
  size_t a = 0, b = 0;
  while (a < nu.size() || b < nv.size()) {
    int x = a < nu.size() ? nu[a].first : g.order();
    int y = b < nv.size() ? nv[b].first : g.order();
    if (x == y) {
      out.common.push_back(x);
      ++a, ++b;
    } else if (x < y) {
      if (x != e.v) out.only_u.push_back(x);
      ++a;
    } else {
      if (y != e.u) out.only_v.push_back(y);
      ++b;
    }
  }
  return out;
}

Graph collapse_multigraph(const Graph& g) {
  std::map<std::pair<int, int>, double> acc;
  std::vector<std::pair<int, int>> order;
  for (const auto& e : g.edges()) {
    auto key = std::minmax(e.u, e.v);
    auto [it, fresh] = acc.emplace(key, 0.0);
    if (fresh) order.push_back(key);
    it->second += e.mult * e.weight;
  }
  std::vector<GraphEdge> edges;
  edges.reserve(order.size());
  for (const auto& key : order) edges.push_back({key.first, key.second, 1, acc[key]});
  return Graph(g.order(), std::move(edges));
}

}  // namespace apsbench
