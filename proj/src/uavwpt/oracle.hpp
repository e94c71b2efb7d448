// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "uavwpt/model.hpp"

namespace uavwpt {

/// Enumeration grid over [0, D/2] x [h_min, h_max] x [theta_min, theta_max],
/// endpoints included.
struct GridSpec {
  std::size_t n_x = 80;
  std::size_t n_h = 80;
  std::size_t n_theta = 80;
};

struct OracleResult {
  double x = 0.0;
  double h = 0.0;
  double theta = 0.0;
  double value = 0.0;  // (1/2) sum_k received power [W]
};

/// Exhaustive maximization of the average two-ER power over the grid, both
/// single- and dual-coverage states admitted. Ties keep the lexicographically
/// first (x, h, theta) index. Shares only the power model with the solver.
OracleResult brute_force_p2(const Scenario& scenario, const UavLimits& limits,
                            const RadioParams& radio, const GridSpec& grid = {});

}  // namespace uavwpt
