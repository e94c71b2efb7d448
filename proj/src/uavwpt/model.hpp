// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

namespace uavwpt {

inline constexpr double kPi = 3.14159265358979323846;

/// Rounded directional-antenna constant 30000 (pi/180)^2 / 4.
inline constexpr double kDefaultAntennaConstant = 2.2846;

/// Relative slack on the coverage test. States built on the beam edge
/// (h = offset / tan(theta)) round to either side of it.
inline constexpr double kCoverageRelTol = 1e-12;

/// Two energy receivers on the ground at x = -D/2 and x = +D/2.
struct Scenario {
  double separation = 0.0;  // D [m]
  double duration = 0.0;    // T [s]

  double half_separation() const { return 0.5 * separation; }
  double er_x(int k) const { return k == 0 ? -half_separation() : half_separation(); }
  std::array<double, 2> er_positions() const { return {er_x(0), er_x(1)}; }
};

struct UavLimits {
  double h_min = 0.0;      // [m]
  double h_max = 0.0;      // [m]
  double v_max = 0.0;      // [m/s]
  double theta_min = 0.0;  // half-power half-beamwidth [rad]
  double theta_max = 0.0;  // [rad]
};

struct RadioParams {
  double beta0 = 0.0;  // linear channel power gain at 1 m
  double p_tx = 0.0;   // [W]
  double g0 = kDefaultAntennaConstant;

  /// beta0 * g0 * p_tx, the numerator shared by every directional power term.
  double directional_scale() const { return beta0 * g0 * p_tx; }
};

/// UAV position on the ER axis (y = 0 always), altitude and beamwidth.
struct UavState {
  double x = 0.0;
  double h = 0.0;
  double theta = 0.0;
};

/// Directional: G0/theta^2 inside the beam, 0 outside. Omni: unit gain.
enum class GainModel { kDirectional, kOmni };

enum class Regime {
  kValid,
  kNeverCoversBoth,   // tan(theta_max) < D / (2 h_max)
  kAlwaysCoversBoth,  // tan(theta_min) > D / h_min
};

const char* to_string(Regime regime);

// Field-level invariants; throw Error(kInvalidArgument).
void check_invariants(const Scenario& scenario);
void check_invariants(const UavLimits& limits);
void check_invariants(const RadioParams& radio);
void check_invariants(const UavState& state);

/// Which operating-regime assumption, if any, the inputs break.
Regime classify_regime(const Scenario& scenario, const UavLimits& limits);

/// Throws Error(kRegimeViolation) naming the failed inequality.
void validate_scenario(const Scenario& scenario, const UavLimits& limits);

bool covers_er(const UavState& state, double er_x);

double antenna_gain_toward(const UavState& state, double er_x,
                           const RadioParams& radio);

/// Received RF power [W] at an ER under free-space path loss.
double received_power(const UavState& state, double er_x,
                      const RadioParams& radio,
                      GainModel model = GainModel::kDirectional);

/// Sum over both ERs of received_power.
double total_received_power(const UavState& state, const Scenario& scenario,
                            const RadioParams& radio,
                            GainModel model = GainModel::kDirectional);

double db_to_linear(double db);
double dbm_to_watts(double dbm);

}  // namespace uavwpt
