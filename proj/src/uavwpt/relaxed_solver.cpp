// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/relaxed_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "uavwpt/error.hpp"
#include "uavwpt/numerics.hpp"

namespace uavwpt {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kSingleEr: return "SingleEr";
    case CaseTag::kDualErEquality: return "DualErEquality";
    case CaseTag::kDualErSlack: return "DualErSlack";
  }
  return "Unknown";
}

namespace {

// psi and its x-derivative with the theta-dependent factors hoisted out.
class BeamEdgeObjective {
 public:
  BeamEdgeObjective(double theta, const Scenario& scenario, const RadioParams& radio)
      : a_(scenario.half_separation()),
        coef_(radio.directional_scale() / (theta * theta)) {
    const double t = std::tan(theta);
    inv_tan2_ = 1.0 / (t * t);
    const double s = std::sin(theta);
    sin2_ = s * s;
  }

  double value(double x) const {
    const double u = x - a_;
    const double v = x + a_;
    const double q = u * u + v * v * inv_tan2_;
    return 0.5 * coef_ * (1.0 / q + sin2_ / (v * v));
  }

  double slope(double x) const {
    const double u = x - a_;
    const double v = x + a_;
    const double q = u * u + v * v * inv_tan2_;
    return -coef_ * ((u + v * inv_tan2_) / (q * q) + sin2_ / (v * v * v));
  }

 private:
  double a_;
  double coef_;
  double inv_tan2_ = 0.0;
  double sin2_ = 0.0;
};

std::vector<double> roots_of_slope(const BeamEdgeObjective& obj, double x_lo, double x_hi,
                                   double separation) {
  return numerics::scan_roots([&](double x) { return obj.slope(x); }, x_lo, x_hi,
                              kRootScanSamples, kRootRelTol * separation);
}

}  // namespace

ThetaSearchRange theta_search_range(const Scenario& s, const UavLimits& l) {
  return {std::max(l.theta_min, std::atan(s.separation / (2.0 * l.h_max))),
          std::min(l.theta_max, std::atan(s.separation / l.h_min))};
}

HoverSolution solve_case1(const Scenario& s, const UavLimits& l, const RadioParams& radio) {
  HoverSolution sol;
  sol.x_bar = s.half_separation();
  sol.h_bar = l.h_min;
  sol.theta_bar = l.theta_min;
  sol.value = radio.directional_scale() /
              (2.0 * l.theta_min * l.theta_min * l.h_min * l.h_min);
  sol.case_tag = CaseTag::kSingleEr;
  return sol;
}

double psi(double x_bar, double theta, const Scenario& s, const RadioParams& radio) {
  return BeamEdgeObjective(theta, s, radio).value(x_bar);
}

double dpsi_dx(double x_bar, double theta, const Scenario& s, const RadioParams& radio) {
  return BeamEdgeObjective(theta, s, radio).slope(x_bar);
}

std::vector<double> stationary_points(double theta, double x_lo, double x_hi, const Scenario& s,
                                      const RadioParams& radio) {
  return roots_of_slope(BeamEdgeObjective(theta, s, radio), x_lo, x_hi, s.separation);
}

XInterval x_bounds(double theta, const Scenario& s, const UavLimits& l) {
  const double a = s.half_separation();
  const double t = std::tan(theta);
  XInterval iv{std::max(0.0, l.h_min * t - a), std::min(a, l.h_max * t - a)};
  // theta on the edge of the search range lands here with x_lo - x_hi ~ ulp.
  if (iv.lo > iv.hi && iv.lo - iv.hi <= 1e-12 * s.separation) {
    iv.lo = iv.hi = std::clamp(iv.hi, 0.0, a);
  }
  if (iv.lo > iv.hi) {
    std::ostringstream os;
    os << "no feasible hover offset for theta = " << theta << " (x_lo = " << iv.lo
       << " > x_hi = " << iv.hi << ")";
    throw Error(ErrorCode::kEmptyInterval, os.str());
  }
  return iv;
}

XOptimum best_x_given_theta(double theta, const Scenario& s, const UavLimits& l,
                            const RadioParams& radio) {
  const ThetaSearchRange range = theta_search_range(s, l);
  const double slack = 1e-12 * std::max(1.0, std::abs(range.hi));
  if (range.empty() || theta < range.lo - slack || theta > range.hi + slack) {
    std::ostringstream os;
    os << "theta = " << theta << " outside search range [" << range.lo << ", " << range.hi
       << "]";
    throw Error(ErrorCode::kOutOfRange, os.str());
  }
  const XInterval iv = x_bounds(theta, s, l);
  const BeamEdgeObjective obj(theta, s, radio);
  // psi is strictly decreasing in x for theta <= pi/4.
  if (theta <= 0.25 * kPi) return {iv.lo, obj.value(iv.lo)};

  std::vector<double> candidates = roots_of_slope(obj, iv.lo, iv.hi, s.separation);
  candidates.push_back(iv.lo);
  candidates.push_back(iv.hi);
  std::sort(candidates.begin(), candidates.end());

  XOptimum best{candidates.front(), obj.value(candidates.front())};
  for (double x : candidates) {
    const double v = obj.value(x);
    if (v > best.value) best = {x, v};
  }
  return best;
}

std::optional<HoverSolution> solve_case2(const Scenario& s, const UavLimits& l,
                                         const RadioParams& radio) {
  const ThetaSearchRange range = theta_search_range(s, l);
  if (range.empty()) return std::nullopt;

  auto objective = [&](double theta) { return best_x_given_theta(theta, s, l, radio).value; };

  std::size_t best_i = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < kThetaGridSize; ++i) {
    const double v = objective(numerics::grid_point(range.lo, range.hi, i, kThetaGridSize));
    if (v > best_value) {
      best_value = v;
      best_i = i;
    }
  }
  double theta = numerics::grid_point(range.lo, range.hi, best_i, kThetaGridSize);
  if (range.hi > range.lo) {
    const double lo = numerics::grid_point(range.lo, range.hi, best_i == 0 ? 0 : best_i - 1,
                                           kThetaGridSize);
    const double hi = numerics::grid_point(
        range.lo, range.hi, std::min(best_i + 1, kThetaGridSize - 1), kThetaGridSize);
    const double refined = numerics::golden_section_max(objective, lo, hi, kThetaTol);
    if (objective(refined) > best_value) theta = refined;
  }

  const XOptimum opt = best_x_given_theta(theta, s, l, radio);
  HoverSolution sol;
  sol.x_bar = opt.x;
  sol.theta_bar = theta;
  sol.h_bar = (opt.x + s.half_separation()) / std::tan(theta);
  sol.value = opt.value;
  sol.case_tag = CaseTag::kDualErEquality;
  return sol;
}

std::optional<HoverSolution> slack_candidate(const Scenario& s, const UavLimits& l,
                                             const RadioParams& radio) {
  const double a = s.half_separation();
  const double h = l.h_min;
  double x_hi = h * std::tan(l.theta_min) - a;
  if (x_hi < -kCoverageRelTol * s.separation) return std::nullopt;
  x_hi = std::clamp(x_hi, 0.0, a);

  auto average_power = [&](double x) {
    return 0.5 * total_received_power(UavState{x, h, l.theta_min}, s, radio);
  };
  // d/dx of 1/((x-a)^2+h^2) + 1/((x+a)^2+h^2), up to a positive factor.
  auto slope = [&](double x) {
    const double qm = (x - a) * (x - a) + h * h;
    const double qp = (x + a) * (x + a) + h * h;
    return -(x - a) / (qm * qm) - (x + a) / (qp * qp);
  };

  std::vector<double> candidates =
      numerics::scan_roots(slope, 0.0, x_hi, kRootScanSamples, kRootRelTol * s.separation);
  candidates.push_back(0.0);
  candidates.push_back(x_hi);
  std::sort(candidates.begin(), candidates.end());

  HoverSolution sol;
  sol.h_bar = h;
  sol.theta_bar = l.theta_min;
  sol.case_tag = CaseTag::kDualErSlack;
  sol.x_bar = candidates.front();
  sol.value = average_power(sol.x_bar);
  for (double x : candidates) {
    const double v = average_power(x);
    if (v > sol.value) {
      sol.x_bar = x;
      sol.value = v;
    }
  }
  return sol;
}

HoverSolution solve_p2(const Scenario& s, const UavLimits& l, const RadioParams& radio) {
  HoverSolution best = solve_case1(s, l, radio);
  if (auto c2 = solve_case2(s, l, radio); c2 && c2->value > best.value) best = *c2;
  if (auto slack = slack_candidate(s, l, radio); slack && slack->value > best.value) best = *slack;
  return best;
}

}  // namespace uavwpt
