#pragma once

#include <cstdint>
#include <vector>

#include "apsbench/graph.hpp"

namespace apsbench::testing {

// splitmix64: tiny, portable, good enough for test-case generation
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

inline Graph random_graph(Rng& rng, int n, double edge_prob, bool integer_weights,
                          int max_weight = 20) {
  std::vector<GraphEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform() < edge_prob) {
        double w = integer_weights ? 1.0 + static_cast<double>(rng.below(max_weight))
                                   : (1.0 + static_cast<double>(rng.below(2 * max_weight))) / 2.0;
        edges.push_back({u, v, 1, w});
      }
  return Graph(n, std::move(edges));
}

inline Graph random_connected_graph(Rng& rng, int n, double extra_prob = 0.3) {
  std::vector<GraphEdge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.below(v));
    edges.push_back({u, v, 1, 1.0});
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool have = false;
      for (const auto& e : edges)
        if ((e.u == u && e.v == v)) have = true;
      if (!have && rng.uniform() < extra_prob) edges.push_back({u, v, 1, 1.0});
    }
  return Graph(n, std::move(edges));
}

}  // namespace apsbench::testing
