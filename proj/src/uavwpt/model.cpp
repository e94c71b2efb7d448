// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/model.hpp"

#include <cmath>
#include <sstream>

#include "uavwpt/error.hpp"

namespace uavwpt {

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::kValid: return "valid";
    case Regime::kNeverCoversBoth: return "never-covers-both";
    case Regime::kAlwaysCoversBoth: return "always-covers-both";
  }
  return "unknown";
}

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void check_invariants(const Scenario& s) {
  require(finite_positive(s.separation), "ER separation D must be > 0");
  require(finite_positive(s.duration), "charging duration T must be > 0");
}

void check_invariants(const UavLimits& l) {
  require(finite_positive(l.h_min), "h_min must be > 0");
  require(std::isfinite(l.h_max) && l.h_max >= l.h_min, "h_max must be >= h_min");
  require(finite_positive(l.v_max), "v_max must be > 0");
  require(finite_positive(l.theta_min), "theta_min must be > 0");
  require(std::isfinite(l.theta_max) && l.theta_max >= l.theta_min,
          "theta_max must be >= theta_min");
  require(l.theta_max <= 0.5 * kPi, "theta_max must be <= pi/2");
}

void check_invariants(const RadioParams& r) {
  require(finite_positive(r.beta0), "beta0 must be > 0");
  require(finite_positive(r.p_tx), "transmit power must be > 0");
  require(finite_positive(r.g0), "antenna constant g0 must be > 0");
}

void check_invariants(const UavState& st) {
  require(std::isfinite(st.x), "state x must be finite");
  require(finite_positive(st.h), "state altitude must be > 0");
  require(st.theta > 0.0 && st.theta <= 0.5 * kPi, "state beamwidth must lie in (0, pi/2]");
}

Regime classify_regime(const Scenario& s, const UavLimits& l) {
  if (std::tan(l.theta_max) < s.separation / (2.0 * l.h_max)) return Regime::kNeverCoversBoth;
  if (std::tan(l.theta_min) > s.separation / l.h_min) return Regime::kAlwaysCoversBoth;
  return Regime::kValid;
}

void validate_scenario(const Scenario& s, const UavLimits& l) {
  check_invariants(s);
  check_invariants(l);
  switch (classify_regime(s, l)) {
    case Regime::kValid:
      return;
    case Regime::kNeverCoversBoth: {
      std::ostringstream os;
      os << "regime violation (never-covers-both): tan(theta_max) = " << std::tan(l.theta_max)
         << " < D/(2 h_max) = " << s.separation / (2.0 * l.h_max);
      throw Error(ErrorCode::kRegimeViolation, os.str());
    }
    case Regime::kAlwaysCoversBoth: {
      std::ostringstream os;
      os << "regime violation (always-covers-both): tan(theta_min) = " << std::tan(l.theta_min)
         << " > D/h_min = " << s.separation / l.h_min;
      throw Error(ErrorCode::kRegimeViolation, os.str());
    }
  }
}

bool covers_er(const UavState& st, double er_x) {
  return std::abs(st.x - er_x) <= st.h * std::tan(st.theta) * (1.0 + kCoverageRelTol);
}

double antenna_gain_toward(const UavState& st, double er_x, const RadioParams& radio) {
  return covers_er(st, er_x) ? radio.g0 / (st.theta * st.theta) : 0.0;
}

double received_power(const UavState& st, double er_x, const RadioParams& radio,
                      GainModel model) {
  const double dx = st.x - er_x;
  const double d2 = dx * dx + st.h * st.h;
  if (model == GainModel::kOmni) return radio.beta0 * radio.p_tx / d2;
  if (!covers_er(st, er_x)) return 0.0;
  return radio.directional_scale() / (st.theta * st.theta * d2);
}

double total_received_power(const UavState& st, const Scenario& s, const RadioParams& radio,
                            GainModel model) {
  return received_power(st, s.er_x(0), radio, model) + received_power(st, s.er_x(1), radio, model);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

}  // namespace uavwpt
