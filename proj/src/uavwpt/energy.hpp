// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "uavwpt/model.hpp"
#include "uavwpt/relaxed_solver.hpp"
#include "uavwpt/trajectory.hpp"

namespace uavwpt {

using EnergyPair = std::array<double, 2>;  // [J] at ER 1 and ER 2

struct EnergyReport {
  double e1 = 0.0;
  double e2 = 0.0;
  double common = 0.0;             // min(e1, e2) [J]
  double normalized_common = 0.0;  // common / T [W]
};

EnergyReport make_report(const EnergyPair& energy, double duration);

EnergyPair hover_energy(const UavState& state, double duration, const Scenario& scenario,
                        const RadioParams& radio, GainModel model = GainModel::kDirectional);

/// Energy gathered over one segment. Hover segments are exact; fly segments
/// use composite Simpson panels of width <= dt between analytically placed
/// breakpoints (coverage edges, beamwidth clamps, beam-rule switches).
EnergyPair segment_energy(const Segment& seg, const Scenario& scenario, const UavLimits& limits,
                          const RadioParams& radio, double dt,
                          GainModel model = GainModel::kDirectional);

EnergyReport integrate_energy(const Trajectory& traj, const Scenario& scenario,
                              const UavLimits& limits, const RadioParams& radio, double dt,
                              GainModel model = GainModel::kDirectional);

/// min(1 ms, T_fly / 1000); 1 ms when the plan never flies.
double default_dt(const Trajectory& traj);

/// Relaxed common energy sol.value * T, which no speed-limited plan exceeds.
double common_energy_upper_bound(const HoverSolution& sol, const Scenario& scenario,
                                 const RadioParams& radio);

}  // namespace uavwpt
