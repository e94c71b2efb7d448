// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics.hpp"

namespace uavwpt {

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kOmniHfh: return "omni";
    case Scheme::kStaticHover: return "static";
  }
  return "unknown";
}

namespace {

HoverSolution omni_plan(double hover_offset, const UavLimits& l) {
  HoverSolution plan;
  plan.x_bar = hover_offset;
  plan.h_bar = l.h_min;
  // Beamwidth is irrelevant under unit gain; carried only to fill the plan.
  plan.theta_bar = l.theta_max;
  return plan;
}

}  // namespace

double omni_common_energy(double x, const Scenario& s, const UavLimits& l,
                          const RadioParams& radio) {
  const double a = s.half_separation();
  const double h = l.h_min;
  const double t_hover = 0.5 * s.duration - x / l.v_max;
  const double c = radio.beta0 * radio.p_tx;
  // ER 2 at +a; ER 1 receives the same by mirror symmetry.
  const double hover = c * t_hover * (1.0 / ((x + a) * (x + a) + h * h) +
                                      1.0 / ((x - a) * (x - a) + h * h));
  // integral over u in [-x, x] of c / ((u - a)^2 + h^2) du / v_max
  const double fly =
      c / (l.v_max * h) * (std::atan((x - a) / h) - std::atan((-x - a) / h));
  return hover + fly;
}

BenchmarkResult omni_benchmark(const Scenario& s, const UavLimits& l, const RadioParams& radio,
                               double dt) {
  check_invariants(s);
  check_invariants(l);
  check_invariants(radio);
  const double a = s.half_separation();
  const double x_cap = std::min(a, 0.5 * s.duration * l.v_max);

  auto objective = [&](double x) { return omni_common_energy(x, s, l, radio); };

  std::size_t best_i = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < kOmniGridSize; ++i) {
    const double x = numerics::grid_point(0.0, a, i, kOmniGridSize);
    if (x > x_cap) break;
    const double v = objective(x);
    if (v > best_value) {
      best_value = v;
      best_i = i;
    }
  }
  double x_best = numerics::grid_point(0.0, a, best_i, kOmniGridSize);
  const double lo = numerics::grid_point(0.0, a, best_i == 0 ? 0 : best_i - 1, kOmniGridSize);
  const double hi = std::min(
      x_cap, numerics::grid_point(0.0, a, std::min(best_i + 1, kOmniGridSize - 1), kOmniGridSize));
  if (hi > lo) {
    const double refined = numerics::golden_section_max(objective, lo, hi, 1e-10 * s.separation);
    if (objective(refined) > best_value) x_best = refined;
  }

  BenchmarkResult result;
  result.scheme = Scheme::kOmniHfh;
  result.trajectory = build_trajectory(omni_plan(x_best, l), s, l);
  const double step = dt > 0.0 ? dt : default_dt(result.trajectory);
  result.report = integrate_energy(result.trajectory, s, l, radio, step, GainModel::kOmni);
  result.params = OmniParams{x_best};
  return result;
}

BenchmarkResult static_benchmark(const Scenario& s, const UavLimits& l, const RadioParams& radio) {
  check_invariants(s);
  check_invariants(l);
  check_invariants(radio);
  const double a = s.half_separation();
  StaticParams p;
  if (std::tan(l.theta_min) >= a / l.h_min) {
    p = {l.h_min, l.theta_min};
  } else {
    p.theta = std::max(l.theta_min, std::atan(a / l.h_max));
    p.h = std::min(l.h_max, a / std::tan(l.theta_min));
  }
  const UavState st{0.0, p.h, p.theta};
  if (p.theta > l.theta_max || !covers_er(st, s.er_x(0)) || !covers_er(st, s.er_x(1))) {
    std::ostringstream os;
    os << "static hover at h = " << p.h << " m, theta = " << p.theta
       << " rad cannot cover both ERs within the beamwidth limits";
    throw Error(ErrorCode::kStaticInfeasible, os.str());
  }

  BenchmarkResult result;
  result.scheme = Scheme::kStaticHover;
  result.trajectory.total_duration = s.duration;
  result.trajectory.segments.push_back(
      {SegmentKind::kHover, 0.0, s.duration, 0.0, 0.0, p.h, FixedBeam{p.theta}});
  result.report = make_report(hover_energy(st, s.duration, s, radio), s.duration);
  result.params = p;
  return result;
}

}  // namespace uavwpt
