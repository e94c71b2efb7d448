// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/runner.hpp"

namespace {

using uavwpt::cli::Command;

// Command-line flag -> config key. Flags override the config file.
const std::vector<std::pair<std::string, std::string>> kOverrides = {
    {"--D", "D"},
    {"--T", "T"},
    {"--D-start", "D_start"},
    {"--D-stop", "D_stop"},
    {"--D-step", "D_step"},
    {"--T-start", "T_start"},
    {"--T-stop", "T_stop"},
    {"--T-step", "T_step"},
    {"--h-min", "h_min"},
    {"--h-max", "h_max"},
    {"--v-max", "v_max"},
    {"--theta-min", "theta_min"},
    {"--theta-max", "theta_max"},
    {"--beta0-db", "beta0_db"},
    {"--p-dbm", "p_dbm"},
    {"--g0", "g0"},
    {"--dt", "dt"},
    {"--schemes", "schemes"},
    {"--out", "out"},
    {"--oracle-grid", "oracle_grid"},
    {"--trajectory-step", "trajectory_step"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hover placement, beamwidth and trajectory planner for UAV wireless power "
               "transfer to two ground receivers"};
  app.require_subcommand(1);

  std::string config_path;
  bool oracle = false;
  bool plot_script = false;
  std::map<std::string, std::string> values;

  struct Sub {
    Command command;
    CLI::App* app;
  };
  std::vector<Sub> subs = {
      {Command::kSolve, app.add_subcommand("solve", "Solve one scenario and print the plan")},
      {Command::kSweepD, app.add_subcommand("sweep-d", "Sweep the ER separation D")},
      {Command::kSweepT, app.add_subcommand("sweep-t", "Sweep the charging duration T")},
      {Command::kVerify, app.add_subcommand("verify", "Check the solver against brute force")},
  };
  for (auto& sub : subs) {
    sub.app->add_option("--config", config_path, "key = value configuration file");
    sub.app->add_flag("--oracle", oracle, "Also run the brute-force oracle check");
    sub.app->add_flag("--plot-script", plot_script, "Emit plot_results.py next to the CSVs");
    for (const auto& [flag, key] : kOverrides) {
      sub.app->add_option(flag, values[key], "override '" + key + "'");
    }
  }

  CLI11_PARSE(app, argc, argv);

  uavwpt::cli::RunConfig config;
  try {
    if (!config_path.empty()) uavwpt::cli::load_config_file(config, config_path);
    for (const auto& sub : subs) {
      if (!sub.app->parsed()) continue;
      for (const auto& [flag, key] : kOverrides) {
        if (sub.app->count(flag) > 0) uavwpt::cli::apply_setting(config, key, values[key]);
      }
    }
    if (oracle) config.oracle = true;
    if (plot_script) config.plot_script = true;
  } catch (const uavwpt::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  for (const auto& sub : subs) {
    if (sub.app->parsed()) return uavwpt::cli::run(sub.command, config, std::cout, std::cerr);
  }
  return 2;
}
