// SPDX-License-Identifier: Apache-2.0

#include "cli/runner.hpp"

#include <uavwpt/uavwpt.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace uavwpt::cli {

namespace {

namespace fs = std::filesystem;

// A C-API failure carrying the status and the library's message.
class ApiFailure : public std::runtime_error {
 public:
  ApiFailure(uavwpt_status status, const std::string& context)
      : std::runtime_error(context + ": " + uavwpt_status_string(status) + " (" +
                           uavwpt_last_error() + ")"),
        status_(status) {}

  uavwpt_status status() const { return status_; }

 private:
  uavwpt_status status_;
};

void check(uavwpt_status status, const std::string& context) {
  if (status != UAVWPT_OK) throw ApiFailure(status, context);
}

struct ProblemDeleter {
  void operator()(uavwpt_problem* p) const { uavwpt_problem_destroy(p); }
};
struct TrajectoryDeleter {
  void operator()(uavwpt_trajectory* t) const { uavwpt_trajectory_destroy(t); }
};
using ProblemPtr = std::unique_ptr<uavwpt_problem, ProblemDeleter>;
using TrajectoryPtr = std::unique_ptr<uavwpt_trajectory, TrajectoryDeleter>;

std::string fmt(double v) {
  char buf[64];
  uavwpt_format_number(v, buf, sizeof buf);
  return buf;
}

std::string results_row(std::string_view scheme, double d, double t,
                        const uavwpt_energy_report& r) {
  const std::string name(scheme);
  const size_t n = uavwpt_results_csv_row(name.c_str(), d, t, &r, nullptr, 0);
  std::string row(n, '\0');
  uavwpt_results_csv_row(name.c_str(), d, t, &r, row.data(), n + 1);
  return row;
}

std::string solver_row(double d, const uavwpt_hover_solution& sol) {
  const size_t n = uavwpt_solver_csv_row(d, &sol, nullptr, 0);
  std::string row(n, '\0');
  uavwpt_solver_csv_row(d, &sol, row.data(), n + 1);
  return row;
}

const char* case_name(uavwpt_case c) {
  switch (c) {
    case UAVWPT_CASE_SINGLE_ER: return "SingleEr";
    case UAVWPT_CASE_DUAL_ER_EQUALITY: return "DualErEquality";
    case UAVWPT_CASE_DUAL_ER_SLACK: return "DualErSlack";
  }
  return "Unknown";
}

ProblemPtr make_problem(const RunConfig& c, double d, double t) {
  const uavwpt_scenario scenario{d, t};
  const uavwpt_limits limits{c.h_min, c.h_max, c.v_max, c.theta_min, c.theta_max};
  const uavwpt_radio radio{uavwpt_db_to_linear(c.beta0_db), uavwpt_dbm_to_watts(c.p_dbm), c.g0};
  uavwpt_problem* raw = nullptr;
  check(uavwpt_problem_create(&scenario, &limits, &radio, &raw), "problem setup");
  return ProblemPtr(raw);
}

// A footprint that can never span both ERs is fatal; one that always spans
// both is solved exactly and only reported.
void check_regime(const uavwpt_problem* problem, double d, std::ostream& err) {
  uavwpt_regime regime = UAVWPT_REGIME_VALID;
  const uavwpt_status st = uavwpt_problem_validate(problem, &regime);
  if (st == UAVWPT_OK) return;
  if (regime == UAVWPT_REGIME_ALWAYS_COVERS_BOTH) {
    err << "warning: D = " << fmt(d) << " m: " << uavwpt_last_error() << '\n';
    return;
  }
  throw ApiFailure(st, "D = " + fmt(d) + " m");
}

// Rows buffered in sweep order.
struct RunOutput {
  std::vector<std::string> result_rows;
  std::vector<std::string> solver_rows;
};

struct PointResult {
  uavwpt_hover_solution solution{};
  std::vector<std::pair<SchemeId, uavwpt_energy_report>> reports;
};

PointResult run_point(const RunConfig& c, double d, double t, std::ostream& err,
                      const std::string& trajectory_csv) {
  const ProblemPtr problem = make_problem(c, d, t);
  check_regime(problem.get(), d, err);
  const std::string where = "D = " + fmt(d) + " m, T = " + fmt(t) + " s";

  PointResult point;
  check(uavwpt_solve_relaxed(problem.get(), &point.solution), where);
  for (SchemeId scheme : c.schemes) {
    uavwpt_energy_report report{};
    switch (scheme) {
      case SchemeId::kProposed: {
        uavwpt_trajectory* raw = nullptr;
        check(uavwpt_trajectory_build(problem.get(), &point.solution, &raw), where);
        const TrajectoryPtr traj(raw);
        check(uavwpt_trajectory_energy(traj.get(), c.dt, &report), where);
        if (!trajectory_csv.empty()) {
          check(uavwpt_trajectory_write_csv(traj.get(), c.trajectory_step, trajectory_csv.c_str()),
                trajectory_csv);
        }
        break;
      }
      case SchemeId::kUpperBound: {
        double bound = 0.0;
        check(uavwpt_upper_bound(problem.get(), &point.solution, &bound), where);
        report = {bound, bound, bound, bound / t};
        break;
      }
      case SchemeId::kOmni:
        check(uavwpt_benchmark_omni(problem.get(), c.dt, &report, nullptr, nullptr), where);
        break;
      case SchemeId::kStatic:
        check(uavwpt_benchmark_static(problem.get(), &report, nullptr, nullptr, nullptr), where);
        break;
    }
    point.reports.emplace_back(scheme, report);
  }
  return point;
}

void write_lines(const fs::path& path, std::string_view header,
                 const std::vector<std::string>& rows) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << header << '\n';
  for (const auto& row : rows) os << row << '\n';
  if (!os.flush()) throw std::runtime_error("write failed: " + path.string());
}

void write_plot_script(const fs::path& dir, Command command) {
  std::ofstream os(dir / "plot_results.py", std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write plot script in " + dir.string());
  const bool vs_t = command == Command::kSweepT;
  os << "# Plots results.csv and solver.csv from this directory.\n"
        "import csv\n"
        "import os\n"
        "import matplotlib\n"
        "matplotlib.use('Agg')\n"
        "import matplotlib.pyplot as plt\n\n"
        "here = os.path.dirname(os.path.abspath(__file__))\n\n"
        "def load(name):\n"
        "    with open(os.path.join(here, name)) as f:\n"
        "        return list(csv.DictReader(f))\n\n"
        "results = load('results.csv')\n"
        "axis = '" << (vs_t ? "T_s" : "D_m") << "'\n"
        "fig, ax = plt.subplots()\n"
        "for scheme in dict.fromkeys(r['scheme'] for r in results):\n"
        "    rows = [r for r in results if r['scheme'] == scheme]\n"
        "    ax.plot([float(r[axis]) for r in rows],\n"
        "            [float(r['normalized_W']) for r in rows], marker='o', label=scheme)\n"
        "ax.set_xlabel('" << (vs_t ? "T (s)" : "D (m)") << "')\n"
        "ax.set_ylabel('normalized common energy (W)')\n"
        "ax.legend()\n"
        "fig.savefig(os.path.join(here, 'common_energy.png'), dpi=150)\n";
  if (!vs_t) {
    os << "\nsolver = load('solver.csv')\n"
          "fig, ax = plt.subplots()\n"
          "d = [float(r['D_m']) for r in solver]\n"
          "ax.plot(d, [float(r['x_bar_m']) for r in solver], marker='o', label='x_bar (m)')\n"
          "ax.plot(d, [float(r['h_bar_m']) for r in solver], marker='s', label='h_bar (m)')\n"
          "ax.set_xlabel('D (m)')\n"
          "ax.legend()\n"
          "fig.savefig(os.path.join(here, 'hover_placement.png'), dpi=150)\n";
  }
}

void print_summary(std::ostream& out, double d, double t, const PointResult& point) {
  const auto& s = point.solution;
  out << "scenario: D = " << fmt(d) << " m, T = " << fmt(t) << " s\n"
      << "hover solution: x_bar = " << fmt(s.x_bar) << " m, h_bar = " << fmt(s.h_bar)
      << " m, theta_bar = " << fmt(s.theta_bar) << " rad, value = " << fmt(s.value)
      << " W, case = " << case_name(s.case_tag) << '\n';
  for (const auto& [scheme, r] : point.reports) {
    out << scheme_name(scheme) << ": E1 = " << fmt(r.e1) << " J, E2 = " << fmt(r.e2)
        << " J, common = " << fmt(r.common) << " J, normalized = " << fmt(r.normalized_common)
        << " W\n";
  }
}

int verify(const RunConfig& c, const std::vector<double>& separations, std::ostream& out,
           std::ostream& err) {
  int failures = 0;
  for (double d : separations) {
    const ProblemPtr problem = make_problem(c, d, c.duration);
    check_regime(problem.get(), d, err);
    uavwpt_hover_solution sol{};
    check(uavwpt_solve_relaxed(problem.get(), &sol), "solve");
    uavwpt_oracle_result oracle{};
    check(uavwpt_oracle_brute_force(problem.get(), c.oracle_grid, c.oracle_grid, c.oracle_grid,
                                    &oracle),
          "oracle");
    const bool ok = sol.value >= oracle.value * (1.0 - 0.005);
    if (!ok) ++failures;
    out << (ok ? "PASS" : "FAIL") << " D = " << fmt(d) << " m: solver " << fmt(sol.value)
        << " W, oracle " << fmt(oracle.value) << " W at (x = " << fmt(oracle.x)
        << ", h = " << fmt(oracle.h) << ", theta = " << fmt(oracle.theta) << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

std::string default_out_dir() {
  if (const char* env = std::getenv("UAVWPT_OUT_DIR"); env != nullptr && *env != '\0') return env;
  return "results";
}

int run(Command command, const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    if (command == Command::kVerify) {
      // An explicit D is verified alone, otherwise the whole D sweep.
      return verify(config,
                    config.separation_given ? std::vector<double>{config.separation}
                                            : config.separation_sweep.values(),
                    out, err);
    }

    std::vector<std::pair<double, double>> points;
    switch (command) {
      case Command::kSolve:
        points.emplace_back(config.separation, config.duration);
        break;
      case Command::kSweepD:
        for (double d : config.separation_sweep.values()) points.emplace_back(d, config.duration);
        break;
      case Command::kSweepT:
        for (double t : config.duration_sweep.values()) points.emplace_back(config.separation, t);
        break;
      case Command::kVerify:
        break;
    }

    const bool write_files = command != Command::kSolve || !config.out_dir.empty();
    const fs::path dir = config.out_dir.empty() ? fs::path(default_out_dir()) : fs::path(config.out_dir);
    if (write_files) fs::create_directories(dir);

    RunOutput output;
    std::optional<double> last_d;
    for (const auto& [d, t] : points) {
      const std::string traj_csv =
          command == Command::kSolve && write_files ? (dir / "trajectory.csv").string() : "";
      const PointResult point = run_point(config, d, t, err, traj_csv);
      for (const auto& [scheme, report] : point.reports) {
        output.result_rows.push_back(results_row(scheme_name(scheme), d, t, report));
      }
      if (!last_d || *last_d != d) output.solver_rows.push_back(solver_row(d, point.solution));
      last_d = d;
      if (command == Command::kSolve) print_summary(out, d, t, point);
    }

    if (write_files) {
      write_lines(dir / "results.csv", uavwpt_results_csv_header(), output.result_rows);
      write_lines(dir / "solver.csv", uavwpt_solver_csv_header(), output.solver_rows);
      if (config.plot_script) write_plot_script(dir, command);
      if (command != Command::kSolve) {
        out << "wrote " << output.result_rows.size() << " result rows to "
            << (dir / "results.csv").string() << '\n';
      }
    }

    if (config.oracle && command != Command::kSolve) {
      std::vector<double> ds;
      for (const auto& [d, t] : points) {
        if (ds.empty() || ds.back() != d) ds.push_back(d);
      }
      return verify(config, ds, out, err);
    }
    if (config.oracle) return verify(config, {config.separation}, out, err);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace uavwpt::cli
