#include "apsbench/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace apsbench {

namespace {

struct EdgeContext {
  int u, v;
  std::vector<double> cos_u, cos_v;        // cos(2 theta) on exclusive edges
  std::vector<double> shared_c, shared_s;  // per shared neighbour t:
                                           //   c = cos(2θ_ut) cos(2θ_tv), s = sin sin
  std::vector<double> shared_angles;       // all angles on {u,v} x T edges
  double cos_all_u = 1, cos_all_v = 1;     // over every other edge at u / at v
};

EdgeContext edge_context(const Graph& g, const AngleAssignment& a, int edge_id) {
  const auto& e = g.edge(edge_id);
  EdgeContext ctx;
  ctx.u = e.u;
  ctx.v = e.v;
  auto nu = g.neighbors(e.u);
  auto nv = g.neighbors(e.v);
  size_t bi = 0;
  for (auto [nb, id] : nu) {
    if (nb == e.v) continue;
    double c = std::cos(2 * a.theta(id));
    ctx.cos_all_u *= c;
    while (bi < nv.size() && nv[bi].first < nb) ++bi;
    if (bi < nv.size() && nv[bi].first == nb) {
      int id_tv = nv[bi].second;
      ctx.shared_c.push_back(c * std::cos(2 * a.theta(id_tv)));
      ctx.shared_s.push_back(std::sin(2 * a.theta(id)) * std::sin(2 * a.theta(id_tv)));
      ctx.shared_angles.push_back(a.theta(id));
      ctx.shared_angles.push_back(a.theta(id_tv));
    } else {
      ctx.cos_u.push_back(c);
    }
  }
  for (auto [nb, id] : nv) {
    if (nb == e.u) continue;
    double c = std::cos(2 * a.theta(id));
    ctx.cos_all_v *= c;
    bool shared = false;
    for (auto [nb2, id2] : nu)
      if (nb2 == nb) shared = true;
    if (!shared) ctx.cos_v.push_back(c);
  }
  return ctx;
}

double zz_from_context(const EdgeContext& ctx, bool allow_exact) {
  double base = 1.0;
  for (double c : ctx.cos_u) base *= c;
  for (double c : ctx.cos_v) base *= c;
  size_t t = ctx.shared_c.size();
  if (t == 0) return base;
  bool uniform = true;
  for (double th : ctx.shared_angles)
    if (std::abs(th - ctx.shared_angles[0]) > 1e-12) uniform = false;
  if (uniform) {
    double th = ctx.shared_angles[0];
    double c2 = std::cos(2 * th), s2 = std::sin(2 * th);
    return 0.5 * (1.0 + std::pow(c2 * c2 - s2 * s2, static_cast<double>(t))) * base;
  }
  if (!allow_exact) throw std::invalid_argument("zz: shared-neighbour angles differ");
  if (t > 24)
    throw std::invalid_argument(
        "zz: shared neighbourhood too large for the exact sum, use uniform angles");
  // even-subset sum, one branch per shared neighbour
  double sum = 0;
  auto rec = [&](auto&& self, size_t i, double prod, bool even) -> void {
    if (i == t) {
      if (even) sum += prod;
      return;
    }
    self(self, i + 1, prod * ctx.shared_c[i], even);
    self(self, i + 1, prod * ctx.shared_s[i], !even);
  };
  rec(rec, 0, 1.0, true);
  return base * sum;
}

void require_simple(const Graph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("energy: simple graph required, collapse first");
}

// allocation-free in the common case: one two-pointer sweep collects the
// cosine products, the shared-neighbour count and whether the angles
// incident to the shared set are all equal
EdgeEnergy edge_energy(const Graph& g, const AngleAssignment& a, int edge_id) {
  const auto& e = g.edge(edge_id);
  auto nu = g.neighbors(e.u);
  auto nv = g.neighbors(e.v);
  double cos_all_u = 1, cos_all_v = 1, base = 1;
  int t = 0;
  double shared_angle = 0;
  bool uniform = true;
  size_t bi = 0;
  for (auto [nb, id] : nu) {
    if (nb == e.v) continue;
    double th = a.theta(id);
    cos_all_u *= std::cos(2 * th);
    while (bi < nv.size() && nv[bi].first < nb) ++bi;
    if (bi < nv.size() && nv[bi].first == nb) {
      double th2 = a.theta(nv[bi].second);
      if (t == 0)
        shared_angle = th;
      else if (std::abs(th - shared_angle) > 1e-12)
        uniform = false;
      if (std::abs(th2 - shared_angle) > 1e-12) uniform = false;
      ++t;
    } else {
      base *= std::cos(2 * th);
    }
  }
  size_t ai = 0;
  for (auto [nb, id] : nv) {
    if (nb == e.u) continue;
    double c = std::cos(2 * a.theta(id));
    cos_all_v *= c;
    while (ai < nu.size() && nu[ai].first < nb) ++ai;
    bool shared = ai < nu.size() && nu[ai].first == nb;
    if (!shared) base *= c;
  }
  double s = std::sin(2 * a.theta(edge_id));
  EdgeEnergy out;
  out.qp = s * cos_all_u;
  out.pq = s * cos_all_v;
  if (t == 0) {
    out.zz = base;
  } else if (uniform) {
    double c2 = std::cos(2 * shared_angle), s2 = std::sin(2 * shared_angle);
    out.zz = 0.5 * (1.0 + std::pow(c2 * c2 - s2 * s2, t)) * base;
  } else {
    out.zz = zz_from_context(edge_context(g, a, edge_id), true);
  }
  out.g = 0.5 * (1.0 + out.qp + out.pq + out.zz);
  return out;
}

template <bool Parallel>
EnergyBreakdown energy_impl(const Graph& g, const AngleAssignment& a) {
  require_simple(g);
  if (a.size() != g.edge_count())
    throw std::invalid_argument("energy: angle count mismatch");
  EnergyBreakdown out;
  int m = g.edge_count();
  out.per_edge.resize(m);
  EdgeEnergy* per = out.per_edge.data();
#pragma omp parallel for schedule(dynamic, 64) if (Parallel)
  for (int id = 0; id < m; ++id) per[id] = edge_energy(g, a, id);
  // compensated serial reduction keeps the total independent of thread count
  double sum = 0, comp = 0;
  for (int id = 0; id < m; ++id) {
    double term = g.edge(id).weight * out.per_edge[id].g - comp;
    double next = sum + term;
    comp = (next - sum) - term;
    sum = next;
  }
  out.total = sum;
  return out;
}

}  // namespace

double expect_qp(const Graph& g, const AngleAssignment& a, int edge_id) {
  require_simple(g);
  EdgeContext ctx = edge_context(g, a, edge_id);
  return std::sin(2 * a.theta(edge_id)) * ctx.cos_all_u;
}

double expect_pq(const Graph& g, const AngleAssignment& a, int edge_id) {
  require_simple(g);
  EdgeContext ctx = edge_context(g, a, edge_id);
  return std::sin(2 * a.theta(edge_id)) * ctx.cos_all_v;
}

double expect_zz_exact(const Graph& g, const AngleAssignment& a, int edge_id) {
  require_simple(g);
  EdgeContext ctx = edge_context(g, a, edge_id);
  if (ctx.shared_c.size() > 24)
    throw std::invalid_argument(
        "zz: shared neighbourhood too large for the exact sum, use uniform angles");
  // force the subset sum even when the uniform shortcut would apply
  double base = 1.0;
  for (double c : ctx.cos_u) base *= c;
  for (double c : ctx.cos_v) base *= c;
  size_t t = ctx.shared_c.size();
  double sum = 0;
  auto rec = [&](auto&& self, size_t i, double prod, bool even) -> void {
    if (i == t) {
      if (even) sum += prod;
      return;
    }
    self(self, i + 1, prod * ctx.shared_c[i], even);
    self(self, i + 1, prod * ctx.shared_s[i], !even);
  };
  rec(rec, 0, 1.0, true);
  return base * sum;
}

double expect_zz_uniform_t(const Graph& g, const AngleAssignment& a, int edge_id) {
  require_simple(g);
  EdgeContext ctx = edge_context(g, a, edge_id);
  for (double th : ctx.shared_angles)
    if (std::abs(th - ctx.shared_angles[0]) > 1e-12)
      throw std::invalid_argument("zz: shared-neighbour angles differ");
  return zz_from_context(ctx, false);
}

double quasi_complete_zz(QuasiCompleteEdgeKind kind, int k, double theta,
                         double theta_ext) {
  double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
  double c4 = c2 * c2 - s2 * s2;
  double ce = std::cos(2 * theta_ext);
  switch (kind) {
    case QuasiCompleteEdgeKind::EvenXU:
      if (k % 2 != 0 || k < 4) throw std::invalid_argument("zz: kind needs even k >= 4");
      return 0.5 * (1.0 + std::pow(c4, k - 2)) * ce * c2;
    case QuasiCompleteEdgeKind::EvenUV:
      if (k % 2 != 0 || k < 4) throw std::invalid_argument("zz: kind needs even k >= 4");
      return 0.5 * (1.0 + std::pow(c4, k - 1));
    case QuasiCompleteEdgeKind::OddUX:
      if (k % 2 != 1 || k < 3) throw std::invalid_argument("zz: kind needs odd k >= 3");
      return 0.5 * (1.0 + std::pow(c4, k - 3)) * ce * c2 * c2 * c2;
    case QuasiCompleteEdgeKind::OddUV:
      if (k % 2 != 1 || k < 3) throw std::invalid_argument("zz: kind needs odd k >= 3");
      return 0.5 * (1.0 + std::pow(c4, k - 2)) * c2 * c2;
  }
  throw std::invalid_argument("zz: bad kind");
}

EnergyBreakdown total_energy(const Graph& g, const AngleAssignment& a) {
  return energy_impl<true>(g, a);
}

EnergyBreakdown total_energy_serial(const Graph& g, const AngleAssignment& a) {
  return energy_impl<false>(g, a);
}

}  // namespace apsbench
