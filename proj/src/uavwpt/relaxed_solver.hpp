// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "uavwpt/model.hpp"

namespace uavwpt {

/// Which branch of the hover-placement problem produced a solution.
enum class CaseTag {
  kSingleEr,        // beam serves one ER at a time, hovering above it
  kDualErEquality,  // both ERs covered, beam edge exactly on the far ER
  kDualErSlack,     // both ERs covered with h_min and theta_min both binding
};

const char* to_string(CaseTag tag);

/// Optimal symmetric hovering: the UAV spends T/2 at (-x_bar, h_bar) and T/2
/// at (+x_bar, h_bar) with beamwidth theta_bar. `value` is the per-ER average
/// received power [W], so the relaxed common energy is value * T.
struct HoverSolution {
  double x_bar = 0.0;
  double h_bar = 0.0;
  double theta_bar = 0.0;
  double value = 0.0;
  CaseTag case_tag = CaseTag::kSingleEr;
};

/// Beamwidths for which some x in [0, D/2] can place the beam edge on the far
/// ER with an altitude inside [h_min, h_max].
struct ThetaSearchRange {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
};

struct XInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct XOptimum {
  double x = 0.0;
  double value = 0.0;
};

ThetaSearchRange theta_search_range(const Scenario& scenario, const UavLimits& limits);

HoverSolution solve_case1(const Scenario& scenario, const UavLimits& limits,
                          const RadioParams& radio);

/// Average two-ER power with the altitude eliminated through
/// h * tan(theta) = x + D/2.
double psi(double x_bar, double theta, const Scenario& scenario, const RadioParams& radio);

/// Partial derivative of psi with respect to x_bar.
double dpsi_dx(double x_bar, double theta, const Scenario& scenario, const RadioParams& radio);

/// Zeros of dpsi_dx in [x_lo, x_hi], ascending. At most four exist.
std::vector<double> stationary_points(double theta, double x_lo, double x_hi,
                                      const Scenario& scenario, const RadioParams& radio);

/// Hover offsets keeping h = (x + D/2) / tan(theta) inside [h_min, h_max].
/// Throws Error(kEmptyInterval) when no such offset exists.
XInterval x_bounds(double theta, const Scenario& scenario, const UavLimits& limits);

/// Best hover offset for a fixed beamwidth on the beam-edge manifold. Throws
/// Error(kOutOfRange) for theta outside theta_search_range.
XOptimum best_x_given_theta(double theta, const Scenario& scenario, const UavLimits& limits,
                            const RadioParams& radio);

/// Line search over theta_search_range. Empty when that range is empty.
std::optional<HoverSolution> solve_case2(const Scenario& scenario, const UavLimits& limits,
                                         const RadioParams& radio);

/// Best state with both ERs covered while h = h_min and theta = theta_min,
/// when the beam at that altitude and width reaches past the far ER.
std::optional<HoverSolution> slack_candidate(const Scenario& scenario, const UavLimits& limits,
                                             const RadioParams& radio);

/// Optimal symmetric hovering solution of the speed-unconstrained problem.
HoverSolution solve_p2(const Scenario& scenario, const UavLimits& limits,
                       const RadioParams& radio);

inline constexpr std::size_t kRootScanSamples = 2048;
inline constexpr double kRootRelTol = 1e-10;
inline constexpr std::size_t kThetaGridSize = 4096;
inline constexpr double kThetaTol = 1e-7;

}  // namespace uavwpt
