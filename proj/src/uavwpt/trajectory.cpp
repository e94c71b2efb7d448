// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "uavwpt/csv.hpp"
#include "uavwpt/error.hpp"

namespace uavwpt {

double Segment::speed() const {
  const double dt = duration();
  return dt > 0.0 ? std::abs(x_end - x_start) / dt : 0.0;
}

double Segment::x_at(double t) const {
  const double dt = duration();
  if (dt <= 0.0) return x_start;
  const double f = std::clamp((t - t_start) / dt, 0.0, 1.0);
  return x_start + (x_end - x_start) * f;
}

double Trajectory::fly_duration() const {
  double total = 0.0;
  for (const Segment& seg : segments) {
    if (seg.kind == SegmentKind::kFly) total += seg.duration();
  }
  return total;
}

Trajectory build_trajectory(const HoverSolution& sol, const Scenario& s, const UavLimits& l) {
  check_invariants(s);
  check_invariants(l);
  const double T = s.duration;
  Trajectory traj;
  traj.total_duration = T;
  const FixedBeam hover_beam{sol.theta_bar};

  if (sol.x_bar == 0.0) {
    traj.segments.push_back({SegmentKind::kHover, 0.0, T, 0.0, 0.0, sol.h_bar, hover_beam});
    return traj;
  }

  const double t_fly = 2.0 * sol.x_bar / l.v_max;
  if (T < t_fly * (1.0 - 1e-12)) {
    std::ostringstream os;
    os << "charging duration T = " << T << " s is shorter than the flight time "
       << t_fly << " s between the hover points";
    throw Error(ErrorCode::kDurationTooShort, os.str());
  }
  const double t_hover = std::max(0.0, 0.5 * T - sol.x_bar / l.v_max);
  const double t1 = t_hover;
  const double t2 = T - t_hover;
  if (t1 > 0.0) {
    traj.segments.push_back(
        {SegmentKind::kHover, 0.0, t1, -sol.x_bar, -sol.x_bar, sol.h_bar, hover_beam});
  }
  traj.segments.push_back(
      {SegmentKind::kFly, t1, t2, -sol.x_bar, sol.x_bar, sol.h_bar, ScheduledBeam{}});
  if (t2 < T) {
    traj.segments.push_back(
        {SegmentKind::kHover, t2, T, sol.x_bar, sol.x_bar, sol.h_bar, hover_beam});
  }
  return traj;
}

FlightBeam flight_beam(double x, double h, const Scenario& s, const UavLimits& l,
                       const RadioParams& radio) {
  const double d0 = std::abs(x - s.er_x(0));
  const double d1 = std::abs(x - s.er_x(1));
  const double near_theta =
      std::clamp(std::atan(std::min(d0, d1) / h), l.theta_min, l.theta_max);
  const double far_theta =
      std::clamp(std::atan(std::max(d0, d1) / h), l.theta_min, l.theta_max);

  const UavState far_state{x, h, far_theta};
  if (!covers_er(far_state, s.er_x(0)) || !covers_er(far_state, s.er_x(1))) {
    return {near_theta, false};
  }
  const double near_power = total_received_power(UavState{x, h, near_theta}, s, radio);
  const double far_power = total_received_power(far_state, s, radio);
  if (near_power >= far_power) return {near_theta, false};
  return {far_theta, true};
}

double flight_beamwidth(double x, double h, const Scenario& s, const UavLimits& l,
                        const RadioParams& radio) {
  return flight_beam(x, h, s, l, radio).theta;
}

double beamwidth_at(const Segment& seg, double x, const Scenario& s, const UavLimits& l,
                    const RadioParams& radio) {
  if (const auto* fixed = std::get_if<FixedBeam>(&seg.beam)) return fixed->theta;
  return flight_beamwidth(x, seg.h, s, l, radio);
}

UavState state_at(const Trajectory& traj, double t, const Scenario& s, const UavLimits& l,
                  const RadioParams& radio) {
  if (!(t > 0.0) || t > traj.total_duration * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "time " << t << " s outside (0, " << traj.total_duration << "]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  const Segment* hit = nullptr;
  for (const Segment& seg : traj.segments) {
    if (t < seg.t_start || t > seg.t_end) continue;
    if (seg.kind == SegmentKind::kHover) {
      hit = &seg;
      break;
    }
    if (hit == nullptr) hit = &seg;
  }
  if (hit == nullptr && t > traj.total_duration && !traj.segments.empty()) {
    hit = &traj.segments.back();
  }
  if (hit == nullptr) throw Error(ErrorCode::kOutOfRange, "time not covered by any segment");
  const double x = hit->x_at(t);
  return {x, hit->h, beamwidth_at(*hit, x, s, l, radio)};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, double step,
                          const Scenario& s, const UavLimits& l, const RadioParams& radio) {
  if (!(step > 0.0)) throw Error(ErrorCode::kInvalidArgument, "sampling step must be > 0");
  os << "t_s,x_m,h_m,theta_rad\n";
  const double T = traj.total_duration;
  const auto n = static_cast<long long>(std::floor(T / step * (1.0 + 1e-12)));
  auto row = [&](double t) {
    const UavState st = state_at(traj, t, s, l, radio);
    os << csv::format_number(t) << ',' << csv::format_number(st.x) << ','
       << csv::format_number(st.h) << ',' << csv::format_number(st.theta) << '\n';
  };
  for (long long k = 1; k <= n; ++k) row(std::min(T, static_cast<double>(k) * step));
  if (n == 0 || static_cast<double>(n) * step < T * (1.0 - 1e-12)) row(T);
}

}  // namespace uavwpt
