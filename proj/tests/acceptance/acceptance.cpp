// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common/scenarios.hpp"
#include "uavwpt/benchmarks.hpp"
#include "uavwpt/energy.hpp"
#include "uavwpt/oracle.hpp"
#include "uavwpt/relaxed_solver.hpp"
#include "uavwpt/trajectory.hpp"

namespace {

using namespace uavwpt;
using uavwpt::testing::Problem;
using uavwpt::testing::defaults;
using uavwpt::testing::random_valid;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void fail(const std::string& what) {
    if (pass_) first_ = what;
    pass_ = false;
    ++failures_;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (pass_) return {true, summary};
    std::ostringstream os;
    os << summary << "; " << failures_ << " violation(s), first: " << first_;
    return {false, os.str()};
  }

 private:
  bool pass_ = true;
  int failures_ = 0;
  std::string first_;
};

std::string num(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

double proposed_common(const Problem& p, const HoverSolution& sol) {
  const Trajectory traj = build_trajectory(sol, p.scenario, p.limits);
  return integrate_energy(traj, p.scenario, p.limits, p.radio, default_dt(traj)).common;
}

// Copy of p with T stretched so the hover points of sol are reachable.
Problem reachable(Problem p, const HoverSolution& sol) {
  p.scenario.duration = std::max(p.scenario.duration, 2.0 * sol.x_bar / p.limits.v_max);
  return p;
}

Outcome ac1_hover_structure() {
  Check c;
  auto p = defaults(30.0, 20.0);
  int transitions = 0;
  for (int d = 2; d <= 30; ++d) {
    p.scenario.separation = d;
    const HoverSolution sol = solve_p2(p.scenario, p.limits, p.radio);
    const std::string at = "D=" + std::to_string(d);
    if (d <= 12) {
      c.expect(std::abs(sol.x_bar) <= 1e-9, at + ": x_bar=" + num(sol.x_bar) + " expected 0");
    } else if (d >= 15) {
      c.expect(std::abs(sol.x_bar - d / 2.0) <= 1e-9 && std::abs(sol.h_bar - 10.0) <= 1e-9 &&
                   std::abs(sol.theta_bar - kPi / 6.0) <= 1e-9,
               at + ": expected hover above each ER at h_min, theta_min");
    } else {
      const bool moved = sol.x_bar > 0.0 && sol.x_bar < d / 2.0;
      const bool raised = sol.h_bar > p.limits.h_min + 1e-9;
      c.expect(moved || raised, at + ": no transition (x_bar=" + num(sol.x_bar) +
                                    ", h_bar=" + num(sol.h_bar) + ")");
      if (moved || raised) ++transitions;
    }
  }
  return c.outcome("x_bar=0 for D<=12, D/2 at (h_min, theta_min) for D>=15, " +
                   std::to_string(transitions) + "/2 transition points");
}

Outcome ac2_ordering() {
  Check c;
  auto p = defaults(30.0, 20.0);
  double worst_gap = 0.0;
  double min_margin = 1e300;
  for (int d = 2; d <= 30; ++d) {
    p.scenario.separation = d;
    const HoverSolution sol = solve_p2(p.scenario, p.limits, p.radio);
    const double prop = proposed_common(p, sol);
    const double ub = common_energy_upper_bound(sol, p.scenario, p.radio);
    const double sta = static_benchmark(p.scenario, p.limits, p.radio).report.common;
    const double omni = omni_benchmark(p.scenario, p.limits, p.radio).report.common;
    const std::string at = "D=" + std::to_string(d);
    if (d <= 12) {
      const double gap = std::max(std::abs(prop - ub), std::abs(sta - ub)) / ub;
      worst_gap = std::max(worst_gap, gap);
      c.expect(gap <= 0.01, at + ": proposed/static differ from upper bound by " + num(gap));
    }
    if (d >= 15) {
      min_margin = std::min(min_margin, std::min(prop - sta, prop - omni) / prop);
      c.expect(prop > sta, at + ": proposed " + num(prop) + " <= static " + num(sta));
      c.expect(prop > omni, at + ": proposed " + num(prop) + " <= omni " + num(omni));
    }
  }
  return c.outcome("D<=12 max rel gap to upper bound " + num(worst_gap, 3) +
                   "; D>=15 min rel margin over benchmarks " + num(min_margin, 3));
}

Outcome ac3_asymptotics() {
  Check c;
  auto p = defaults(30.0, 20.0);
  double prev = 0.0;
  double ratio_200 = 0.0;
  std::ostringstream ratios;
  for (double t : {10.0, 20.0, 50.0, 100.0, 200.0}) {
    p.scenario.duration = t;
    const HoverSolution sol = solve_p2(p.scenario, p.limits, p.radio);
    const double prop = proposed_common(p, sol) / t;
    const double ub = sol.value;
    const double sta = static_benchmark(p.scenario, p.limits, p.radio).report.normalized_common;
    const double omni = omni_benchmark(p.scenario, p.limits, p.radio).report.normalized_common;
    const std::string at = "T=" + num(t);
    c.expect(prop >= prev, at + ": normalized energy decreased");
    c.expect(prop > sta && prop > omni, at + ": does not exceed both benchmarks");
    ratios << (ratios.tellp() > 0 ? " " : "") << num(prop / ub, 4);
    if (t == 200.0) ratio_200 = prop / ub;
    prev = prop;
  }
  c.expect(ratio_200 >= 0.99, "T=200: ratio to upper bound " + num(ratio_200, 5) + " < 0.99");
  return c.outcome("ratio to upper bound over T={10,20,50,100,200}: " + ratios.str());
}

Outcome ac4_oracle() {
  Check c;
  std::mt19937_64 rng(20240401);
  double worst = 1e300;
  for (int i = 0; i < 10; ++i) {
    const Problem p = random_valid(rng, 5.0, 50.0);
    const double solver = solve_p2(p.scenario, p.limits, p.radio).value;
    const double oracle = brute_force_p2(p.scenario, p.limits, p.radio, {80, 80, 80}).value;
    const double rel = (solver - oracle) / oracle;
    worst = std::min(worst, rel);
    c.expect(solver >= oracle * (1.0 - 0.005),
             "scenario " + std::to_string(i) + ": solver below oracle by " + num(-rel));
  }
  return c.outcome("10 scenarios, worst (solver - oracle)/oracle = " + num(worst, 3));
}

Outcome ac5_derivative() {
  Check c;
  std::mt19937_64 rng(20240402);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Problem p = random_valid(rng);
    const ThetaSearchRange range = theta_search_range(p.scenario, p.limits);
    const double h = 1e-6 * p.scenario.separation;
    for (int j = 0; j < 100; ++j) {
      const double theta = range.lo + (range.hi - range.lo) * u(rng);
      const XInterval iv = x_bounds(theta, p.scenario, p.limits);
      const double x = iv.lo + (iv.hi - iv.lo) * u(rng);
      const double fd = (psi(x + h, theta, p.scenario, p.radio) -
                         psi(x - h, theta, p.scenario, p.radio)) / (2.0 * h);
      const double d = dpsi_dx(x, theta, p.scenario, p.radio);
      const double rel = std::abs(d - fd) / std::abs(fd);
      worst = std::max(worst, rel);
      c.expect(rel < 1e-6, "x=" + num(x) + " theta=" + num(theta) + ": rel err " + num(rel));
    }
  }
  return c.outcome("1000 points, max relative error " + num(worst, 3));
}

Outcome ac6_monotonicity() {
  Check c;
  std::mt19937_64 rng(20240403);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int draws = 0;
  while (draws < 200) {
    const Problem p = random_valid(rng);
    const ThetaSearchRange range = theta_search_range(p.scenario, p.limits);
    const double hi = std::min(range.hi, kPi / 4.0);
    if (hi < range.lo) continue;
    const double theta = range.lo + (hi - range.lo) * u(rng);
    const XInterval iv = x_bounds(theta, p.scenario, p.limits);
    for (int j = 0; j <= 20; ++j) {
      const double x = iv.lo + (iv.hi - iv.lo) * j / 20.0;
      const double d = dpsi_dx(x, theta, p.scenario, p.radio);
      c.expect(d < 0.0, "theta=" + num(theta) + " x=" + num(x) + ": slope " + num(d));
    }
    ++draws;
  }
  return c.outcome("200 draws x 21 offsets, slope negative throughout");
}

Outcome ac7_convergence() {
  Check c;
  std::mt19937_64 rng(20240404);
  double worst = 0.0;
  int done = 0;
  while (done < 5) {
    Problem p = random_valid(rng);
    const HoverSolution sol = solve_p2(p.scenario, p.limits, p.radio);
    if (sol.x_bar <= 0.0) continue;
    p = reachable(p, sol);
    const Trajectory traj = build_trajectory(sol, p.scenario, p.limits);
    for (const Segment& seg : traj.segments) {
      if (seg.kind != SegmentKind::kFly) continue;
      const EnergyPair a = segment_energy(seg, p.scenario, p.limits, p.radio, 1e-3);
      const EnergyPair b = segment_energy(seg, p.scenario, p.limits, p.radio, 5e-4);
      for (int k = 0; k < 2; ++k) {
        const double rel = std::abs(a[k] - b[k]) / b[k];
        worst = std::max(worst, rel);
        c.expect(rel < 1e-4, "flight energy changed by " + num(rel));
      }
    }
    ++done;
  }
  return c.outcome("5 flights, max relative change " + num(worst, 3));
}

Outcome ac8_symmetry_bounds() {
  Check c;
  std::mt19937_64 rng(20240405);
  double worst_sym = 0.0;
  auto audit = [&](const Problem& p, const HoverSolution& sol, bool dominance) {
    const Trajectory traj = build_trajectory(sol, p.scenario, p.limits);
    const EnergyReport r =
        integrate_energy(traj, p.scenario, p.limits, p.radio, default_dt(traj));
    const double sym = std::abs(r.e1 - r.e2) / std::max(r.e1, r.e2);
    worst_sym = std::max(worst_sym, sym);
    c.expect(sym <= 1e-6, "e1/e2 asymmetry " + num(sym));
    const int n = 500;
    const double T = p.scenario.duration;
    UavState prev{};
    for (int j = 1; j <= n; ++j) {
      const double t = T * j / n;
      const UavState st = state_at(traj, t, p.scenario, p.limits, p.radio);
      c.expect(st.h >= p.limits.h_min && st.h <= p.limits.h_max, "altitude out of bounds");
      c.expect(st.theta >= p.limits.theta_min && st.theta <= p.limits.theta_max,
               "beamwidth out of bounds");
      if (j > 1) {
        c.expect(std::abs(st.x - prev.x) <= p.limits.v_max * (T / n) * (1.0 + 1e-9),
                 "speed limit exceeded");
      }
      prev = st;
    }
    if (dominance) {
      const double ub = common_energy_upper_bound(sol, p.scenario, p.radio);
      c.expect(r.common <= ub * (1.0 + 1e-9), "common energy above upper bound");
    }
  };
  auto p = defaults(30.0, 20.0);
  for (int d = 2; d <= 30; ++d) {
    p.scenario.separation = d;
    audit(p, solve_p2(p.scenario, p.limits, p.radio), true);
  }
  for (int i = 0; i < 50; ++i) {
    const Problem q = random_valid(rng);
    const HoverSolution sol = solve_p2(q.scenario, q.limits, q.radio);
    audit(reachable(q, sol), sol, true);
  }
  return c.outcome("79 trajectories, max e1/e2 asymmetry " + num(worst_sym, 3) +
                   ", bounds/speed/dominance checked");
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "hover structure across D", 10.0, ac1_hover_structure},
      {"AC2", "scheme ordering and coincidence", 30.0, ac2_ordering},
      {"AC3", "asymptotic approach to upper bound", 30.0, ac3_asymptotics},
      {"AC4", "oracle equivalence", 60.0, ac4_oracle},
      {"AC5", "derivative correctness", 60.0, ac5_derivative},
      {"AC6", "narrow-beam monotonicity", 60.0, ac6_monotonicity},
      {"AC7", "integrator self-convergence", 60.0, ac7_convergence},
      {"AC8", "symmetry, bounds and dominance", 120.0, ac8_symmetry_bounds},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > cr.budget_s) {
      o.pass = false;
      o.detail += "; runtime " + num(secs, 3) + " s over budget " + num(cr.budget_s) + " s";
    }
    std::printf("[%s] %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, secs,
                o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
