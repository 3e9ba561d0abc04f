#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apsbench/graph.hpp"

namespace apsbench {

/// Role of an edge in a Henning-Yeo graph. Even-degree graphs use the
/// first two classes, odd-degree graphs all three.
enum class EdgeClass : uint8_t {
  InternalQuasiComplete = 0,  // inside a quasi-complete block
  ExternalAttachment = 1,     // block anchor to the rest of the graph
  OtherExternal = 2,          // bipartite scaffold edges (odd degree only)
};

const char* edge_class_name(EdgeClass c);
EdgeClass edge_class_from_name(const std::string& name);

struct HYParams {
  int k = 4;
  int p = 1;
  /// (w1 internal, w2 external); unweighted when absent.
  std::optional<std::pair<double, double>> weights;
  enum class BaseKind { Circulant, Random } base = BaseKind::Circulant;
  uint64_t seed = 0;  // used by the Random base only
};

struct HYInstance {
  Graph graph;
  std::vector<EdgeClass> edge_class;  // per edge id
  int k = 0;
  int p = 0;
  int block_count = 0;                          // quasi-complete copies
  std::vector<std::pair<int, int>> block_range; // [first, last] vertex of each copy
  int scaffold_order = 0;                       // base / bipartite vertices: 0..scaffold_order-1
};

/// K_{k+1} minus one edge; the two degree-deficient vertices are returned.
struct QuasiCompleteEven {
  Graph graph;
  int x = 0, y = 0;
};
QuasiCompleteEven build_quasi_complete_even(int k);

/// K_{k+2} minus a near-perfect matching on w_1..w_{k-1} and the two edges
/// from w_{k+2} to w_k, w_{k+1}; the attachment vertex w_{k+2} is returned.
struct QuasiCompleteOdd {
  Graph graph;
  int attach = 0;
};
QuasiCompleteOdd build_quasi_complete_odd(int k);

/// k-regular Henning-Yeo graph; dispatches on the parity of k and applies
/// weights when present.
HYInstance build_henning_yeo(const HYParams& params);

/// Re-weight by edge class: InternalQuasiComplete edges get w1, everything
/// else w2. Topology unchanged.
Graph apply_weights(const Graph& g, const std::vector<EdgeClass>& cls, double w1, double w2);

/// Closed-form order: p(k^2+k+2)/2 for even k, p(k^3-3k)+k^2+2k+1 for odd k.
long long hy_order(int k, int p);

/// Smallest p whose order reaches min_order.
int smallest_p_for_order(int k, long long min_order);

/// Structural audit of the matching mechanism: deleting the scaffold must
/// leave exactly the quasi-complete blocks as connected components, each of
/// odd order.
bool odd_components_after_scaffold_deletion(const HYInstance& inst);

}  // namespace apsbench
