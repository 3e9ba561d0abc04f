#pragma once

#include <vector>

#include "apsbench/angles.hpp"
#include "apsbench/graph.hpp"

namespace apsbench {

/// Per-edge expectations on the rotated product state and the edge term
/// g = (1 + qp + pq + zz)/2.
struct EdgeEnergy {
  double qp = 0, pq = 0, zz = 0, g = 0;
};

struct EnergyBreakdown {
  std::vector<EdgeEnergy> per_edge;
  double total = 0;  // sum of w_ij * g_ij, compensated summation
};

/// sin(2 theta_uv) times the cosine product over the other edges at u.
double expect_qp(const Graph& g, const AngleAssignment& a, int edge_id);
/// Mirror of expect_qp over the other edges at v.
double expect_pq(const Graph& g, const AngleAssignment& a, int edge_id);

/// Exact ZZ expectation: even-subset sum over the shared neighbourhood.
/// Cost 2^|T|; refuses |T| > 24 (use the uniform-angle form there).
double expect_zz_exact(const Graph& g, const AngleAssignment& a, int edge_id);

/// Simplified ZZ for the case where every edge between {u,v} and their
/// shared neighbours carries one common angle (checked to 1e-12):
/// (1 + (cos^2 - sin^2)^t)/2 times the exclusive cosine products.
double expect_zz_uniform_t(const Graph& g, const AngleAssignment& a, int edge_id);

/// Closed-form ZZ on quasi-complete blocks, by edge position. theta is the
/// internal angle, theta_ext the angle on the block's external edges.
enum class QuasiCompleteEdgeKind {
  EvenXU,  // touches a degree-deficient vertex of the even block
  EvenUV,  // interior edge of the even block
  OddUX,   // touches the attachment vertex of the odd block
  OddUV,   // generic interior edge of the odd block
};
double quasi_complete_zz(QuasiCompleteEdgeKind kind, int k, double theta,
                         double theta_ext);

/// Weighted total over all edges; per edge the uniform-angle ZZ form is
/// used when its precondition holds, the exact sum otherwise. Simple
/// graphs only (collapse multigraphs first).
EnergyBreakdown total_energy(const Graph& g, const AngleAssignment& a);  // OpenMP
EnergyBreakdown total_energy_serial(const Graph& g, const AngleAssignment& a);

}  // namespace apsbench
