// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/energy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "uavwpt/error.hpp"

namespace uavwpt {

namespace {

// The scheduled beam on one smooth piece of a flight: which candidate wins
// and which ERs it covers are fixed, only the geometry varies.
struct FlightRegime {
  bool serves_both = false;
  std::array<bool, 2> covered{};
};

FlightRegime regime_at(double x, double h, const Scenario& s, const UavLimits& l,
                       const RadioParams& radio) {
  const FlightBeam beam = flight_beam(x, h, s, l, radio);
  const UavState st{x, h, beam.theta};
  return {beam.serves_both, {covers_er(st, s.er_x(0)), covers_er(st, s.er_x(1))}};
}

EnergyPair power_in_regime(const FlightRegime& regime, double x, double h, const Scenario& s,
                           const UavLimits& l, const RadioParams& radio) {
  const double d0 = std::abs(x - s.er_x(0));
  const double d1 = std::abs(x - s.er_x(1));
  const double edge = regime.serves_both ? std::max(d0, d1) : std::min(d0, d1);
  const double theta = std::clamp(std::atan(edge / h), l.theta_min, l.theta_max);
  const double scale = radio.directional_scale() / (theta * theta);
  EnergyPair p{};
  for (int k = 0; k < 2; ++k) {
    if (!regime.covered[k]) continue;
    const double dx = x - s.er_x(k);
    p[k] = scale / (dx * dx + h * h);
  }
  return p;
}

// Composite Simpson over one smooth piece with an even number of panels of
// width <= dt.
template <typename Power>
EnergyPair simpson(Power&& power, double ta, double tb, double dt) {
  const double len = tb - ta;
  if (!(len > 0.0)) return {0.0, 0.0};
  auto n = static_cast<std::size_t>(std::max(1.0, std::ceil(len / dt * (1.0 - 1e-12))));
  n += n % 2;
  const double step = len / static_cast<double>(n);
  EnergyPair acc{};
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = i == n ? tb : ta + step * static_cast<double>(i);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const EnergyPair p = power(t);
    acc[0] += w * p[0];
    acc[1] += w * p[1];
  }
  return {acc[0] * step / 3.0, acc[1] * step / 3.0};
}

bool same_regime(const FlightRegime& a, const FlightRegime& b) {
  return a.serves_both == b.serves_both && a.covered == b.covered;
}

// Breakpoints of the scheduled-beam integrand along a fly segment, as times.
std::vector<double> flight_breakpoints(const Segment& seg, const Scenario& s, const UavLimits& l,
                                       const RadioParams& radio, double dt) {
  const double v = (seg.x_end - seg.x_start) / seg.duration();
  std::vector<double> xs{0.0};
  for (double er : s.er_positions()) {
    xs.push_back(er);
    for (double theta : {l.theta_min, l.theta_max}) {
      const double reach = seg.h * std::tan(theta);
      xs.push_back(er - reach);
      xs.push_back(er + reach);
    }
  }
  std::vector<double> ts{seg.t_start, seg.t_end};
  for (double x : xs) {
    const double t = seg.t_start + (x - seg.x_start) / v;
    if (t > seg.t_start && t < seg.t_end) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  // Beam-rule switches have no closed form: scan each piece at the
  // quadrature step and bisect where the winning candidate changes.
  const double t_tol = 1e-13 * std::max(1.0, seg.t_end);
  std::vector<double> out{ts.front()};
  for (std::size_t p = 0; p + 1 < ts.size(); ++p) {
    const double ta = ts[p];
    const double tb = ts[p + 1];
    const auto n = static_cast<std::size_t>(std::max(2.0, std::ceil((tb - ta) / dt)));
    auto regime = [&](double t) { return regime_at(seg.x_at(t), seg.h, s, l, radio); };
    // Sample interior points only; piece endpoints sit on discontinuities.
    auto interior = [&](std::size_t i) {
      return ta + (tb - ta) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    };
    double t_prev = interior(0);
    FlightRegime r_prev = regime(t_prev);
    for (std::size_t i = 1; i < n; ++i) {
      const double t = interior(i);
      const FlightRegime r = regime(t);
      if (!same_regime(r, r_prev)) {
        double a = t_prev;
        double b = t;
        while (b - a > t_tol) {
          const double m = 0.5 * (a + b);
          if (same_regime(regime(m), r_prev)) a = m; else b = m;
        }
        out.push_back(0.5 * (a + b));
      }
      t_prev = t;
      r_prev = r;
    }
    out.push_back(tb);
  }
  return out;
}

}  // namespace

EnergyReport make_report(const EnergyPair& e, double duration) {
  EnergyReport r;
  r.e1 = e[0];
  r.e2 = e[1];
  r.common = std::min(e[0], e[1]);
  r.normalized_common = r.common / duration;
  return r;
}

EnergyPair hover_energy(const UavState& st, double duration, const Scenario& s,
                        const RadioParams& radio, GainModel model) {
  if (duration < 0.0) throw Error(ErrorCode::kInvalidArgument, "hover duration must be >= 0");
  return {received_power(st, s.er_x(0), radio, model) * duration,
          received_power(st, s.er_x(1), radio, model) * duration};
}

EnergyPair segment_energy(const Segment& seg, const Scenario& s, const UavLimits& l,
                          const RadioParams& radio, double dt, GainModel model) {
  if (!(dt > 0.0)) throw Error(ErrorCode::kInvalidArgument, "integration step dt must be > 0");
  if (!(seg.duration() > 0.0)) return {0.0, 0.0};

  if (seg.kind == SegmentKind::kHover || seg.x_start == seg.x_end) {
    const UavState st{seg.x_start, seg.h, beamwidth_at(seg, seg.x_start, s, l, radio)};
    return hover_energy(st, seg.duration(), s, radio, model);
  }

  if (model == GainModel::kOmni) {
    auto power = [&](double t) {
      const UavState st{seg.x_at(t), seg.h, l.theta_max};
      return EnergyPair{received_power(st, s.er_x(0), radio, GainModel::kOmni),
                        received_power(st, s.er_x(1), radio, GainModel::kOmni)};
    };
    return simpson(power, seg.t_start, seg.t_end, dt);
  }

  if (const auto* fixed = std::get_if<FixedBeam>(&seg.beam)) {
    // Fixed beam in flight: coverage edges are the only discontinuities.
    std::vector<double> ts{seg.t_start, seg.t_end};
    const double v = (seg.x_end - seg.x_start) / seg.duration();
    const double reach = seg.h * std::tan(fixed->theta);
    for (double er : s.er_positions()) {
      for (double x : {er - reach, er + reach}) {
        const double t = seg.t_start + (x - seg.x_start) / v;
        if (t > seg.t_start && t < seg.t_end) ts.push_back(t);
      }
    }
    std::sort(ts.begin(), ts.end());
    EnergyPair total{};
    for (std::size_t p = 0; p + 1 < ts.size(); ++p) {
      const UavState mid{seg.x_at(0.5 * (ts[p] + ts[p + 1])), seg.h, fixed->theta};
      const std::array<bool, 2> cov{covers_er(mid, s.er_x(0)), covers_er(mid, s.er_x(1))};
      auto power = [&](double t) {
        EnergyPair e{};
        const double x = seg.x_at(t);
        for (int k = 0; k < 2; ++k) {
          if (!cov[k]) continue;
          const double dx = x - s.er_x(k);
          e[k] = radio.directional_scale() / (fixed->theta * fixed->theta * (dx * dx + seg.h * seg.h));
        }
        return e;
      };
      const EnergyPair e = simpson(power, ts[p], ts[p + 1], dt);
      total[0] += e[0];
      total[1] += e[1];
    }
    return total;
  }

  const std::vector<double> ts = flight_breakpoints(seg, s, l, radio, dt);
  EnergyPair total{};
  for (std::size_t p = 0; p + 1 < ts.size(); ++p) {
    const double ta = ts[p];
    const double tb = ts[p + 1];
    if (!(tb > ta)) continue;
    const FlightRegime regime = regime_at(seg.x_at(0.5 * (ta + tb)), seg.h, s, l, radio);
    auto power = [&](double t) {
      return power_in_regime(regime, seg.x_at(t), seg.h, s, l, radio);
    };
    const EnergyPair e = simpson(power, ta, tb, dt);
    total[0] += e[0];
    total[1] += e[1];
  }
  return total;
}

EnergyReport integrate_energy(const Trajectory& traj, const Scenario& s, const UavLimits& l,
                              const RadioParams& radio, double dt, GainModel model) {
  EnergyPair total{};
  for (const Segment& seg : traj.segments) {
    const EnergyPair e = segment_energy(seg, s, l, radio, dt, model);
    total[0] += e[0];
    total[1] += e[1];
  }
  return make_report(total, traj.total_duration);
}

double default_dt(const Trajectory& traj) {
  const double t_fly = traj.fly_duration();
  return t_fly > 0.0 ? std::min(1e-3, t_fly / 1000.0) : 1e-3;
}

double common_energy_upper_bound(const HoverSolution& sol, const Scenario& s,
                                 const RadioParams& /*radio*/) {
  return sol.value * s.duration;
}

}  // namespace uavwpt
