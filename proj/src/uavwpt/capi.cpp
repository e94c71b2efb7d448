// SPDX-License-Identifier: Apache-2.0

#include <uavwpt/uavwpt.h>

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <string>

#include "uavwpt/benchmarks.hpp"
#include "uavwpt/csv.hpp"
#include "uavwpt/energy.hpp"
#include "uavwpt/error.hpp"
#include "uavwpt/model.hpp"
#include "uavwpt/oracle.hpp"
#include "uavwpt/relaxed_solver.hpp"
#include "uavwpt/trajectory.hpp"

struct uavwpt_problem {
  uavwpt::Scenario scenario;
  uavwpt::UavLimits limits;
  uavwpt::RadioParams radio;
};

struct uavwpt_trajectory {
  uavwpt_problem problem;
  uavwpt::Trajectory trajectory;
  uavwpt::GainModel model = uavwpt::GainModel::kDirectional;
};

namespace {

thread_local std::string g_last_error;

uavwpt_status to_status(uavwpt::ErrorCode code) {
  using uavwpt::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return UAVWPT_ERR_INVALID_ARGUMENT;
    case ErrorCode::kRegimeViolation: return UAVWPT_ERR_REGIME_VIOLATION;
    case ErrorCode::kEmptyInterval: return UAVWPT_ERR_EMPTY_INTERVAL;
    case ErrorCode::kDurationTooShort: return UAVWPT_ERR_DURATION_TOO_SHORT;
    case ErrorCode::kOutOfRange: return UAVWPT_ERR_OUT_OF_RANGE;
    case ErrorCode::kStaticInfeasible: return UAVWPT_ERR_STATIC_INFEASIBLE;
    case ErrorCode::kIo: return UAVWPT_ERR_IO;
  }
  return UAVWPT_ERR_INTERNAL;
}

template <typename F>
uavwpt_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return UAVWPT_OK;
  } catch (const uavwpt::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return UAVWPT_ERR_INTERNAL;
}

void require_non_null(const void* p, const char* what) {
  if (p == nullptr) {
    throw uavwpt::Error(uavwpt::ErrorCode::kInvalidArgument, std::string(what) + " is NULL");
  }
}

uavwpt::HoverSolution from_c(const uavwpt_hover_solution& s) {
  uavwpt::HoverSolution out;
  out.x_bar = s.x_bar;
  out.h_bar = s.h_bar;
  out.theta_bar = s.theta_bar;
  out.value = s.value;
  switch (s.case_tag) {
    case UAVWPT_CASE_SINGLE_ER: out.case_tag = uavwpt::CaseTag::kSingleEr; break;
    case UAVWPT_CASE_DUAL_ER_EQUALITY: out.case_tag = uavwpt::CaseTag::kDualErEquality; break;
    case UAVWPT_CASE_DUAL_ER_SLACK: out.case_tag = uavwpt::CaseTag::kDualErSlack; break;
  }
  return out;
}

uavwpt_hover_solution to_c(const uavwpt::HoverSolution& s) {
  uavwpt_hover_solution out{};
  out.x_bar = s.x_bar;
  out.h_bar = s.h_bar;
  out.theta_bar = s.theta_bar;
  out.value = s.value;
  switch (s.case_tag) {
    case uavwpt::CaseTag::kSingleEr: out.case_tag = UAVWPT_CASE_SINGLE_ER; break;
    case uavwpt::CaseTag::kDualErEquality: out.case_tag = UAVWPT_CASE_DUAL_ER_EQUALITY; break;
    case uavwpt::CaseTag::kDualErSlack: out.case_tag = UAVWPT_CASE_DUAL_ER_SLACK; break;
  }
  return out;
}

uavwpt_energy_report to_c(const uavwpt::EnergyReport& r) {
  return {r.e1, r.e2, r.common, r.normalized_common};
}

size_t copy_out(const std::string& s, char* buf, size_t size) {
  if (buf != nullptr && size > 0) {
    const size_t n = s.size() < size - 1 ? s.size() : size - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

uavwpt_trajectory* wrap(const uavwpt_problem& p, uavwpt::Trajectory traj, uavwpt::GainModel m) {
  return new uavwpt_trajectory{p, std::move(traj), m};
}

}  // namespace

extern "C" {

const char* uavwpt_version(void) { return "1.0.0"; }

const char* uavwpt_status_string(uavwpt_status status) {
  switch (status) {
    case UAVWPT_OK: return "ok";
    case UAVWPT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case UAVWPT_ERR_REGIME_VIOLATION: return "regime violation";
    case UAVWPT_ERR_EMPTY_INTERVAL: return "empty interval";
    case UAVWPT_ERR_DURATION_TOO_SHORT: return "duration too short";
    case UAVWPT_ERR_OUT_OF_RANGE: return "out of range";
    case UAVWPT_ERR_STATIC_INFEASIBLE: return "static hover infeasible";
    case UAVWPT_ERR_IO: return "i/o failure";
    case UAVWPT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* uavwpt_last_error(void) { return g_last_error.c_str(); }

double uavwpt_db_to_linear(double db) { return uavwpt::db_to_linear(db); }

double uavwpt_dbm_to_watts(double dbm) { return uavwpt::dbm_to_watts(dbm); }

uavwpt_status uavwpt_problem_create(const uavwpt_scenario* scenario, const uavwpt_limits* limits,
                                    const uavwpt_radio* radio, uavwpt_problem** out) {
  return guarded([&] {
    require_non_null(scenario, "scenario");
    require_non_null(limits, "limits");
    require_non_null(radio, "radio");
    require_non_null(out, "out");
    *out = nullptr;
    uavwpt_problem p;
    p.scenario = {scenario->separation, scenario->duration};
    p.limits = {limits->h_min, limits->h_max, limits->v_max, limits->theta_min,
                limits->theta_max};
    p.radio.beta0 = radio->beta0;
    p.radio.p_tx = radio->p_tx;
    if (radio->g0 > 0.0) p.radio.g0 = radio->g0;
    uavwpt::check_invariants(p.scenario);
    uavwpt::check_invariants(p.limits);
    uavwpt::check_invariants(p.radio);
    *out = new uavwpt_problem(p);
  });
}

void uavwpt_problem_destroy(uavwpt_problem* problem) { delete problem; }

uavwpt_status uavwpt_problem_validate(const uavwpt_problem* problem, uavwpt_regime* out) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(out, "out");
    switch (uavwpt::classify_regime(problem->scenario, problem->limits)) {
      case uavwpt::Regime::kValid: *out = UAVWPT_REGIME_VALID; break;
      case uavwpt::Regime::kNeverCoversBoth: *out = UAVWPT_REGIME_NEVER_COVERS_BOTH; break;
      case uavwpt::Regime::kAlwaysCoversBoth: *out = UAVWPT_REGIME_ALWAYS_COVERS_BOTH; break;
    }
    uavwpt::validate_scenario(problem->scenario, problem->limits);
  });
}

uavwpt_status uavwpt_received_power(const uavwpt_problem* problem, const uavwpt_state* state,
                                    int er_index, uavwpt_gain_model model, double* out) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(state, "state");
    require_non_null(out, "out");
    if (er_index != 0 && er_index != 1) {
      throw uavwpt::Error(uavwpt::ErrorCode::kInvalidArgument, "er_index must be 0 or 1");
    }
    const uavwpt::UavState st{state->x, state->h, state->theta};
    uavwpt::check_invariants(st);
    *out = uavwpt::received_power(st, problem->scenario.er_x(er_index), problem->radio,
                                  model == UAVWPT_GAIN_OMNI ? uavwpt::GainModel::kOmni
                                                            : uavwpt::GainModel::kDirectional);
  });
}

uavwpt_status uavwpt_solve_relaxed(const uavwpt_problem* problem, uavwpt_hover_solution* out) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(out, "out");
    *out = to_c(uavwpt::solve_p2(problem->scenario, problem->limits, problem->radio));
  });
}

uavwpt_status uavwpt_upper_bound(const uavwpt_problem* problem,
                                 const uavwpt_hover_solution* solution, double* out_energy) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(solution, "solution");
    require_non_null(out_energy, "out_energy");
    *out_energy =
        uavwpt::common_energy_upper_bound(from_c(*solution), problem->scenario, problem->radio);
  });
}

uavwpt_status uavwpt_trajectory_build(const uavwpt_problem* problem,
                                      const uavwpt_hover_solution* solution,
                                      uavwpt_trajectory** out) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(solution, "solution");
    require_non_null(out, "out");
    *out = nullptr;
    auto traj = uavwpt::build_trajectory(from_c(*solution), problem->scenario, problem->limits);
    *out = wrap(*problem, std::move(traj), uavwpt::GainModel::kDirectional);
  });
}

void uavwpt_trajectory_destroy(uavwpt_trajectory* trajectory) { delete trajectory; }

size_t uavwpt_trajectory_segment_count(const uavwpt_trajectory* trajectory) {
  return trajectory == nullptr ? 0 : trajectory->trajectory.segments.size();
}

uavwpt_status uavwpt_trajectory_segment(const uavwpt_trajectory* trajectory, size_t index,
                                        uavwpt_segment* out) {
  return guarded([&] {
    require_non_null(trajectory, "trajectory");
    require_non_null(out, "out");
    const auto& segs = trajectory->trajectory.segments;
    if (index >= segs.size()) {
      throw uavwpt::Error(uavwpt::ErrorCode::kOutOfRange, "segment index out of range");
    }
    const uavwpt::Segment& seg = segs[index];
    out->kind = seg.kind == uavwpt::SegmentKind::kHover ? UAVWPT_SEGMENT_HOVER : UAVWPT_SEGMENT_FLY;
    out->t_start = seg.t_start;
    out->t_end = seg.t_end;
    out->x_start = seg.x_start;
    out->x_end = seg.x_end;
    out->h = seg.h;
    if (const auto* fixed = std::get_if<uavwpt::FixedBeam>(&seg.beam)) {
      out->scheduled_beam = 0;
      out->theta = fixed->theta;
    } else {
      out->scheduled_beam = 1;
      out->theta = 0.0;
    }
  });
}

uavwpt_status uavwpt_trajectory_state_at(const uavwpt_trajectory* trajectory, double t,
                                         uavwpt_state* out) {
  return guarded([&] {
    require_non_null(trajectory, "trajectory");
    require_non_null(out, "out");
    const auto& p = trajectory->problem;
    const uavwpt::UavState st =
        uavwpt::state_at(trajectory->trajectory, t, p.scenario, p.limits, p.radio);
    *out = {st.x, st.h, st.theta};
  });
}

uavwpt_status uavwpt_trajectory_energy(const uavwpt_trajectory* trajectory, double dt,
                                       uavwpt_energy_report* out) {
  return guarded([&] {
    require_non_null(trajectory, "trajectory");
    require_non_null(out, "out");
    const auto& p = trajectory->problem;
    const double step = dt > 0.0 ? dt : uavwpt::default_dt(trajectory->trajectory);
    *out = to_c(uavwpt::integrate_energy(trajectory->trajectory, p.scenario, p.limits, p.radio,
                                         step, trajectory->model));
  });
}

uavwpt_status uavwpt_trajectory_write_csv(const uavwpt_trajectory* trajectory, double step,
                                          const char* path) {
  return guarded([&] {
    require_non_null(trajectory, "trajectory");
    require_non_null(path, "path");
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw uavwpt::Error(uavwpt::ErrorCode::kIo, std::string("cannot open ") + path);
    const auto& p = trajectory->problem;
    uavwpt::write_trajectory_csv(os, trajectory->trajectory, step, p.scenario, p.limits, p.radio);
    if (!os.flush()) throw uavwpt::Error(uavwpt::ErrorCode::kIo, std::string("write failed: ") + path);
  });
}

uavwpt_status uavwpt_benchmark_omni(const uavwpt_problem* problem, double dt,
                                    uavwpt_energy_report* out_report, double* out_hover_offset,
                                    uavwpt_trajectory** out_trajectory) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(out_report, "out_report");
    if (out_trajectory != nullptr) *out_trajectory = nullptr;
    auto result = uavwpt::omni_benchmark(problem->scenario, problem->limits, problem->radio, dt);
    *out_report = to_c(result.report);
    if (out_hover_offset != nullptr) {
      *out_hover_offset = std::get<uavwpt::OmniParams>(result.params).hover_offset;
    }
    if (out_trajectory != nullptr) {
      *out_trajectory = wrap(*problem, std::move(result.trajectory), uavwpt::GainModel::kOmni);
    }
  });
}

uavwpt_status uavwpt_benchmark_static(const uavwpt_problem* problem,
                                      uavwpt_energy_report* out_report, double* out_h,
                                      double* out_theta, uavwpt_trajectory** out_trajectory) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(out_report, "out_report");
    if (out_trajectory != nullptr) *out_trajectory = nullptr;
    auto result = uavwpt::static_benchmark(problem->scenario, problem->limits, problem->radio);
    *out_report = to_c(result.report);
    const auto& params = std::get<uavwpt::StaticParams>(result.params);
    if (out_h != nullptr) *out_h = params.h;
    if (out_theta != nullptr) *out_theta = params.theta;
    if (out_trajectory != nullptr) {
      *out_trajectory =
          wrap(*problem, std::move(result.trajectory), uavwpt::GainModel::kDirectional);
    }
  });
}

uavwpt_status uavwpt_oracle_brute_force(const uavwpt_problem* problem, size_t n_x, size_t n_h,
                                        size_t n_theta, uavwpt_oracle_result* out) {
  return guarded([&] {
    require_non_null(problem, "problem");
    require_non_null(out, "out");
    const auto r = uavwpt::brute_force_p2(problem->scenario, problem->limits, problem->radio,
                                          {n_x, n_h, n_theta});
    *out = {r.x, r.h, r.theta, r.value};
  });
}

const char* uavwpt_results_csv_header(void) { return uavwpt::csv::kResultsHeader.data(); }

const char* uavwpt_solver_csv_header(void) { return uavwpt::csv::kSolverHeader.data(); }

size_t uavwpt_results_csv_row(const char* scheme, double separation, double duration,
                              const uavwpt_energy_report* report, char* buf, size_t size) {
  if (scheme == nullptr || report == nullptr) return copy_out({}, buf, size);
  const uavwpt::EnergyReport r{report->e1, report->e2, report->common, report->normalized_common};
  return copy_out(uavwpt::csv::results_row(scheme, separation, duration, r), buf, size);
}

size_t uavwpt_solver_csv_row(double separation, const uavwpt_hover_solution* solution, char* buf,
                             size_t size) {
  if (solution == nullptr) return copy_out({}, buf, size);
  return copy_out(uavwpt::csv::solver_row(separation, from_c(*solution)), buf, size);
}

size_t uavwpt_format_number(double value, char* buf, size_t size) {
  return copy_out(uavwpt::csv::format_number(value), buf, size);
}

}  // extern "C"
