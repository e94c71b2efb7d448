// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/oracle.hpp"

#include "uavwpt/error.hpp"

namespace uavwpt {

namespace {

double linspace(double lo, double hi, std::size_t i, std::size_t n) {
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

OracleResult brute_force_p2(const Scenario& s, const UavLimits& l, const RadioParams& radio,
                            const GridSpec& grid) {
  if (grid.n_x < 2 || grid.n_h < 2 || grid.n_theta < 2) {
    throw Error(ErrorCode::kInvalidArgument, "oracle grid counts must be >= 2");
  }
  check_invariants(s);
  check_invariants(l);
  check_invariants(radio);

  OracleResult best;
  best.value = -1.0;
  for (std::size_t ix = 0; ix < grid.n_x; ++ix) {
    const double x = linspace(0.0, s.half_separation(), ix, grid.n_x);
    for (std::size_t ih = 0; ih < grid.n_h; ++ih) {
      const double h = linspace(l.h_min, l.h_max, ih, grid.n_h);
      for (std::size_t it = 0; it < grid.n_theta; ++it) {
        const double theta = linspace(l.theta_min, l.theta_max, it, grid.n_theta);
        const double v = 0.5 * total_received_power(UavState{x, h, theta}, s, radio);
        if (v > best.value) best = {x, h, theta, v};
      }
    }
  }
  return best;
}

}  // namespace uavwpt
