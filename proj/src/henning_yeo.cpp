#include "apsbench/henning_yeo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace apsbench {

const char* edge_class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::InternalQuasiComplete: return "internal";
    case EdgeClass::ExternalAttachment: return "attachment";
    case EdgeClass::OtherExternal: return "bipartite";
  }
  throw std::invalid_argument("bad edge class");
}

EdgeClass edge_class_from_name(const std::string& name) {
  if (name == "internal") return EdgeClass::InternalQuasiComplete;
  if (name == "attachment") return EdgeClass::ExternalAttachment;
  if (name == "bipartite") return EdgeClass::OtherExternal;
  throw std::invalid_argument("bad edge class name: " + name);
}

QuasiCompleteEven build_quasi_complete_even(int k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("quasi-complete (even): k must be even and >= 4");
  std::vector<GraphEdge> edges;
  for (int u = 0; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v)
      if (!(u == 0 && v == 1)) edges.push_back({u, v, 1, 1.0});
  return {Graph(k + 1, std::move(edges)), 0, 1};
}

QuasiCompleteOdd build_quasi_complete_odd(int k) {
  if (k < 3 || k % 2 != 1)
    throw std::invalid_argument("quasi-complete (odd): k must be odd and >= 3");
  // vertices 0..k+1 stand for w_1..w_{k+2}
  std::set<std::pair<int, int>> deleted;
  for (int i = 0; i <= (k - 3) / 2; ++i) deleted.insert({2 * i, 2 * i + 1});
  deleted.insert({k - 1, k + 1});
  deleted.insert({k, k + 1});
  std::vector<GraphEdge> edges;
  for (int u = 0; u <= k + 1; ++u)
    for (int v = u + 1; v <= k + 1; ++v)
      if (!deleted.count({u, v})) edges.push_back({u, v, 1, 1.0});
  return {Graph(k + 2, std::move(edges)), k + 1};
}

namespace {

struct Rng64 {
  uint64_t state;
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

// k-regular base multigraph on p vertices as a list of edge instances
std::vector<std::pair<int, int>> base_graph_even(const HYParams& params) {
  int k = params.k, p = params.p;
  std::vector<std::pair<int, int>> out;
  if (p < 2)
    throw std::invalid_argument("henning-yeo: no loop-free k-regular base on p < 2");
  if (p == 2 || params.base == HYParams::BaseKind::Circulant) {
    if (p == 2) {
      for (int i = 0; i < k; ++i) out.push_back({0, 1});
    } else {
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < k / 2; ++j) out.push_back({i, (i + 1) % p});
    }
    return out;
  }
  // configuration model: pair up k stubs per vertex, retry on self-loops
  Rng64 rng{params.seed ^ 0x5851f42d4c957f2dULL};
  std::vector<int> stubs(static_cast<size_t>(p) * k);
  for (int v = 0; v < p; ++v)
    for (int j = 0; j < k; ++j) stubs[static_cast<size_t>(v) * k + j] = v;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.below(i + 1)]);
    bool ok = true;
    out.clear();
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ok = false;
        break;
      }
      out.push_back({stubs[i], stubs[i + 1]});
    }
    if (ok) return out;
  }
  throw std::runtime_error("henning-yeo: random base sampling failed");
}

}  // namespace

long long hy_order(int k, int p) {
  if (k % 2 == 0) return static_cast<long long>(p) * (k * k + k + 2) / 2;
  return static_cast<long long>(p) * (k * k * k - 3 * k) + k * k + 2 * k + 1;
}

int smallest_p_for_order(int k, long long min_order) {
  int p = k % 2 == 0 ? 2 : 1;
  while (hy_order(k, p) < min_order) ++p;
  return p;
}

namespace {

HYInstance build_even(const HYParams& params) {
  int k = params.k, p = params.p;
  if (k < 4) throw std::invalid_argument("henning-yeo: even k must be >= 4");
  auto base = base_graph_even(params);
  std::vector<GraphEdge> edges;
  std::vector<EdgeClass> cls;
  HYInstance inst;
  inst.k = k;
  inst.p = p;
  inst.scaffold_order = p;
  int n = p;
  for (auto [u, v] : base) {
    int x = n, y = n + 1;
    for (int a = n; a <= n + k; ++a)
      for (int b = a + 1; b <= n + k; ++b)
        if (!(a == x && b == y)) {
          edges.push_back({a, b, 1, 1.0});
          cls.push_back(EdgeClass::InternalQuasiComplete);
        }
    edges.push_back({u, x, 1, 1.0});
    cls.push_back(EdgeClass::ExternalAttachment);
    edges.push_back({v, y, 1, 1.0});
    cls.push_back(EdgeClass::ExternalAttachment);
    inst.block_range.push_back({n, n + k});
    n += k + 1;
  }
  inst.block_count = static_cast<int>(inst.block_range.size());
  inst.graph = Graph(n, std::move(edges));
  inst.edge_class = std::move(cls);
  return inst;
}

HYInstance build_odd(const HYParams& params) {
  int k = params.k, p = params.p;
  if (k < 3) throw std::invalid_argument("henning-yeo: odd k must be >= 3");
  if (p < 1) throw std::invalid_argument("henning-yeo: p must be >= 1");
  int v2 = p * (k - 1) + 1;
  std::vector<GraphEdge> edges;
  std::vector<EdgeClass> cls;
  HYInstance inst;
  inst.k = k;
  inst.p = p;
  inst.scaffold_order = p + v2;
  std::vector<int> deg_v(v2, 0);
  // bipartite scaffold: u_i joined to k consecutive v's, windows overlap by one
  for (int i = 1; i <= p; ++i)
    for (int j = (k - 1) * (i - 1) + 1; j <= (k - 1) * (i - 1) + k; ++j) {
      edges.push_back({i - 1, p + j - 1, 1, 1.0});
      cls.push_back(EdgeClass::OtherExternal);
      ++deg_v[j - 1];
    }
  int n = p + v2;
  std::set<std::pair<int, int>> deleted;
  for (int i = 0; i <= (k - 3) / 2; ++i) deleted.insert({2 * i, 2 * i + 1});
  deleted.insert({k - 1, k + 1});
  deleted.insert({k, k + 1});
  for (int j = 0; j < v2; ++j) {
    for (int c = 0; c < k - deg_v[j]; ++c) {
      for (int a = 0; a <= k + 1; ++a)
        for (int b = a + 1; b <= k + 1; ++b)
          if (!deleted.count({a, b})) {
            edges.push_back({n + a, n + b, 1, 1.0});
            cls.push_back(EdgeClass::InternalQuasiComplete);
          }
      edges.push_back({p + j, n + k + 1, 1, 1.0});
      cls.push_back(EdgeClass::ExternalAttachment);
      inst.block_range.push_back({n, n + k + 1});
      n += k + 2;
    }
  }
  inst.block_count = static_cast<int>(inst.block_range.size());
  inst.graph = Graph(n, std::move(edges));
  inst.edge_class = std::move(cls);
  return inst;
}

}  // namespace

HYInstance build_henning_yeo(const HYParams& params) {
  HYInstance inst = params.k % 2 == 0 ? build_even(params) : build_odd(params);
  if (params.weights) {
    auto [w1, w2] = *params.weights;
    inst.graph = apply_weights(inst.graph, inst.edge_class, w1, w2);
  }
  return inst;
}

Graph apply_weights(const Graph& g, const std::vector<EdgeClass>& cls, double w1, double w2) {
  if (!(w1 > 0) || !(w2 > 0))
    throw std::invalid_argument("apply_weights: weights must be positive");
  if (static_cast<int>(cls.size()) != g.edge_count())
    throw std::invalid_argument("apply_weights: untagged edge");
  std::vector<GraphEdge> edges = g.edges();
  for (int id = 0; id < g.edge_count(); ++id)
    edges[id].weight = cls[id] == EdgeClass::InternalQuasiComplete ? w1 : w2;
  return Graph(g.order(), std::move(edges));
}

bool odd_components_after_scaffold_deletion(const HYInstance& inst) {
  const Graph& g = inst.graph;
  int n = g.order();
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (int s = inst.scaffold_order; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = comps;
    int size = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (auto [nb, id] : g.neighbors(v)) {
        (void)id;
        if (nb < inst.scaffold_order || comp[nb] != -1) continue;
        comp[nb] = comps;
        stack.push_back(nb);
      }
    }
    if (size % 2 == 0) return false;
    ++comps;
  }
  if (comps != inst.block_count) return false;
  // components must coincide with the declared blocks
  for (int b = 0; b < inst.block_count; ++b) {
    auto [lo, hi] = inst.block_range[b];
    for (int v = lo; v <= hi; ++v)
      if (comp[v] != comp[lo]) return false;
  }
  return true;
}

}  // namespace apsbench
