// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <variant>

#include "uavwpt/energy.hpp"
#include "uavwpt/trajectory.hpp"

namespace uavwpt {

enum class Scheme { kOmniHfh, kStaticHover };

const char* to_string(Scheme scheme);

struct OmniParams {
  double hover_offset = 0.0;  // x_h [m]; hovers at -x_h and +x_h
};

struct StaticParams {
  double h = 0.0;
  double theta = 0.0;
};

struct BenchmarkResult {
  Scheme scheme = Scheme::kOmniHfh;
  Trajectory trajectory;
  EnergyReport report;
  std::variant<OmniParams, StaticParams> params;
};

inline constexpr std::size_t kOmniGridSize = 2048;

/// Unit-gain antenna at h_min, symmetric hover-fly-hover with the hover
/// offset chosen to maximize the common energy. `dt` <= 0 selects
/// default_dt for the final report.
BenchmarkResult omni_benchmark(const Scenario& scenario, const UavLimits& limits,
                               const RadioParams& radio, double dt = 0.0);

/// Common energy of the unit-gain hover-fly-hover plan with offset x_h, in
/// closed form. Requires T >= 2 x_h / v_max.
double omni_common_energy(double hover_offset, const Scenario& scenario, const UavLimits& limits,
                          const RadioParams& radio);

/// Single hover over the midpoint with both ERs inside the beam.
BenchmarkResult static_benchmark(const Scenario& scenario, const UavLimits& limits,
                                 const RadioParams& radio);

}  // namespace uavwpt
