#pragma once

#include <vector>

#include "apsbench/graph.hpp"

namespace apsbench {

/// One rotation angle per edge id, each in [0, pi/4].
class AngleAssignment {
 public:
  AngleAssignment() = default;
  explicit AngleAssignment(std::vector<double> theta);  // validates the range

  static AngleAssignment uniform(const Graph& g, double theta);

  double theta(int edge_id) const { return theta_.at(edge_id); }
  int size() const { return static_cast<int>(theta_.size()); }
  const std::vector<double>& values() const { return theta_; }

 private:
  std::vector<double> theta_;
};

}  // namespace apsbench
