// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include "uavwpt/model.hpp"
#include "uavwpt/relaxed_solver.hpp"

namespace uavwpt {

struct FixedBeam {
  double theta = 0.0;
};

/// Beamwidth chosen pointwise by flight_beamwidth.
struct ScheduledBeam {};

using BeamwidthRule = std::variant<FixedBeam, ScheduledBeam>;

enum class SegmentKind { kHover, kFly };

/// Constant-altitude piece of a plan over [t_start, t_end]; x moves linearly.
struct Segment {
  SegmentKind kind = SegmentKind::kHover;
  double t_start = 0.0;
  double t_end = 0.0;
  double x_start = 0.0;
  double x_end = 0.0;
  double h = 0.0;
  BeamwidthRule beam = FixedBeam{};

  double duration() const { return t_end - t_start; }
  double speed() const;
  double x_at(double t) const;
};

struct Trajectory {
  std::vector<Segment> segments;
  double total_duration = 0.0;

  double fly_duration() const;
};

/// Hover-fly-hover plan from a symmetric hovering solution. A zero offset
/// degenerates to a single hover over the midpoint. Throws
/// Error(kDurationTooShort) when T < 2 x_bar / v_max.
Trajectory build_trajectory(const HoverSolution& sol, const Scenario& scenario,
                            const UavLimits& limits);

/// Narrowest beam covering either the nearer ER alone or both ERs, clamped
/// to the beamwidth limits, whichever delivers more total power.
struct FlightBeam {
  double theta = 0.0;
  bool serves_both = false;  // the two-ER candidate won
};

FlightBeam flight_beam(double x, double h, const Scenario& scenario, const UavLimits& limits,
                       const RadioParams& radio);

double flight_beamwidth(double x, double h, const Scenario& scenario, const UavLimits& limits,
                        const RadioParams& radio);

/// Beamwidth of a segment at position x.
double beamwidth_at(const Segment& seg, double x, const Scenario& scenario,
                    const UavLimits& limits, const RadioParams& radio);

/// UAV state at t in (0, T]. Boundary instants between a hover and a fly
/// segment resolve to the hover. Throws Error(kOutOfRange) otherwise.
UavState state_at(const Trajectory& traj, double t, const Scenario& scenario,
                  const UavLimits& limits, const RadioParams& radio);

/// Sample table `t_s,x_m,h_m,theta_rad` at t = step, 2 step, ..., T.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, double step,
                          const Scenario& scenario, const UavLimits& limits,
                          const RadioParams& radio);

}  // namespace uavwpt
