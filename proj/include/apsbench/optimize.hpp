#pragma once

#include <cmath>
#include <functional>

namespace apsbench {

struct ScalarMax {
  double x = 0;
  double value = 0;
};

/// Golden-section maximization on [lo, hi]; f must be unimodal there.
template <typename F>
ScalarMax golden_section_max(F&& f, double lo, double hi, double xtol = 1e-10,
                             int max_iter = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

/// Coarse grid scan followed by golden-section refinement around the best
/// grid point. Robust against the odd non-unimodal tail.
template <typename F>
ScalarMax grid_then_golden_max(F&& f, double lo, double hi, int grid_points,
                               double xtol = 1e-10) {
  if (grid_points < 3) grid_points = 3;
  int best = 0;
  double best_val = f(lo);
  for (int i = 1; i < grid_points; ++i) {
    double x = lo + (hi - lo) * i / (grid_points - 1);
    double v = f(x);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double step = (hi - lo) / (grid_points - 1);
  double a = std::max(lo, lo + (best - 1) * step);
  double b = std::min(hi, lo + (best + 1) * step);
  return golden_section_max(f, a, b, xtol);
}

}  // namespace apsbench
