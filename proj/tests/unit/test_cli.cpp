// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/runner.hpp"

namespace uavwpt::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("uavwpt_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(Config, ParsesKeyValuesAndComments) {
  const auto kv = parse_key_values("# header\nD = 12  # inline\n\n  schemes= proposed,omni\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv[0].first, "D");
  EXPECT_EQ(kv[0].second, "12");
  EXPECT_EQ(kv[1].second, "proposed,omni");
  EXPECT_THROW(parse_key_values("D 12\n"), ConfigError);
  EXPECT_THROW(parse_key_values(" = 12\n"), ConfigError);
}

TEST(Config, ParsesMultiplesOfPi) {
  EXPECT_DOUBLE_EQ(parse_real("pi/6"), 3.14159265358979323846 / 6.0);
  EXPECT_DOUBLE_EQ(parse_real("2*pi/3"), 2.0 * 3.14159265358979323846 / 3.0);
  EXPECT_DOUBLE_EQ(parse_real(" 0.25 "), 0.25);
  EXPECT_THROW(parse_real("pi/0"), ConfigError);
  EXPECT_THROW(parse_real("abc"), ConfigError);
  EXPECT_THROW(parse_real(""), ConfigError);
}

TEST(Config, Schemes) {
  const auto s = parse_schemes("omni, proposed,omni");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], SchemeId::kOmni);
  EXPECT_EQ(s[1], SchemeId::kProposed);
  EXPECT_THROW(parse_schemes(""), ConfigError);
  EXPECT_THROW(parse_schemes(" , "), ConfigError);
  EXPECT_THROW(parse_schemes("proposed,laser"), ConfigError);
}

TEST(Config, ApplySettingsAndUnknownKey) {
  RunConfig c;
  apply_setting(c, "D", "12");
  apply_setting(c, "theta_min", "pi/4");
  apply_setting(c, "T_step", "5");
  apply_setting(c, "oracle", "true");
  apply_setting(c, "oracle_grid", "40");
  EXPECT_EQ(c.separation, 12.0);
  EXPECT_TRUE(c.separation_given);
  EXPECT_DOUBLE_EQ(c.theta_min, 3.14159265358979323846 / 4.0);
  EXPECT_EQ(c.duration_sweep.step, 5.0);
  EXPECT_TRUE(c.oracle);
  EXPECT_EQ(c.oracle_grid, 40u);
  EXPECT_THROW(apply_setting(c, "warp", "9"), ConfigError);
  EXPECT_THROW(apply_setting(c, "oracle_grid", "1.5"), ConfigError);
}

TEST(Config, LoadFile) {
  const fs::path dir = scratch("cfg");
  fs::create_directories(dir);
  std::ofstream(dir / "run.cfg") << "D = 14\nT = 40\nh_max = 25\n";
  RunConfig c;
  load_config_file(c, (dir / "run.cfg").string());
  EXPECT_EQ(c.separation, 14.0);
  EXPECT_EQ(c.duration, 40.0);
  EXPECT_EQ(c.h_max, 25.0);
  EXPECT_THROW(load_config_file(c, (dir / "missing.cfg").string()), ConfigError);
  fs::remove_all(dir);
}

TEST(Config, SweepValuesIncludeStop) {
  const auto d = SweepSpec{2.0, 30.0, 1.0}.values();
  ASSERT_EQ(d.size(), 29u);
  EXPECT_EQ(d.front(), 2.0);
  EXPECT_EQ(d.back(), 30.0);
  const auto t = SweepSpec{0.1, 0.5, 0.1}.values();
  EXPECT_EQ(t.size(), 5u);
}

TEST(Run, InvalidConfigExitsWithTwo) {
  RunConfig c;
  c.h_max = 5.0;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(Command::kSolve, c, out, err), 2);
  EXPECT_NE(err.str().find("config error"), std::string::npos);
}

TEST(Run, SolvePrintsSummaryWithoutFiles) {
  RunConfig c;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run(Command::kSolve, c, out, err), 0) << err.str();
  EXPECT_NE(out.str().find("SingleEr"), std::string::npos);
  EXPECT_NE(out.str().find("proposed"), std::string::npos);
}

TEST(Run, SolveWritesTrajectoryWhenAskedTo) {
  RunConfig c;
  c.out_dir = scratch("solve").string();
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run(Command::kSolve, c, out, err), 0) << err.str();
  EXPECT_TRUE(fs::exists(fs::path(c.out_dir) / "trajectory.csv"));
  EXPECT_EQ(read_csv(fs::path(c.out_dir) / "results.csv").size(), 5u);
  fs::remove_all(c.out_dir);
}

TEST(Run, DurationTooShortExitsWithOne) {
  RunConfig c;
  c.duration = 5.0;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(Command::kSolve, c, out, err), 1);
  EXPECT_NE(err.str().find("shorter"), std::string::npos);
}

TEST(Run, NeverCoversBothIsFatal) {
  RunConfig c;
  c.separation = 100.0;
  c.theta_max = 3.14159265358979323846 / 4.0;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(Command::kSolve, c, out, err), 1);
}

TEST(Run, SweepDReproducesHoverStructure) {
  RunConfig c;
  c.out_dir = scratch("sweepd").string();
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run(Command::kSweepD, c, out, err), 0) << err.str();

  const auto results = read_csv(fs::path(c.out_dir) / "results.csv");
  ASSERT_EQ(results.size(), 1u + 29u * 4u);
  EXPECT_EQ(results[0].size(), 7u);
  std::map<std::string, int> per_scheme;
  for (std::size_t i = 1; i < results.size(); ++i) ++per_scheme[results[i][0]];
  EXPECT_EQ(per_scheme["proposed"], 29);
  EXPECT_EQ(per_scheme["upper_bound"], 29);
  EXPECT_EQ(per_scheme["omni"], 29);
  EXPECT_EQ(per_scheme["static"], 29);

  const auto solver = read_csv(fs::path(c.out_dir) / "solver.csv");
  ASSERT_EQ(solver.size(), 30u);
  for (std::size_t i = 1; i < solver.size(); ++i) {
    const double d = std::stod(solver[i][0]);
    const double x = std::stod(solver[i][1]);
    if (d <= 12.0) EXPECT_NEAR(x, 0.0, 1e-9) << d;
    if (d >= 15.0) EXPECT_DOUBLE_EQ(x, d / 2.0) << d;
  }

  const std::string first = slurp(fs::path(c.out_dir) / "results.csv");
  ASSERT_EQ(run(Command::kSweepD, c, out, err), 0);
  EXPECT_EQ(slurp(fs::path(c.out_dir) / "results.csv"), first);
  fs::remove_all(c.out_dir);
}

TEST(Run, SweepTApproachesUpperBound) {
  RunConfig c;
  c.out_dir = scratch("sweept").string();
  c.schemes = {SchemeId::kProposed, SchemeId::kUpperBound};
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run(Command::kSweepT, c, out, err), 0) << err.str();
  const auto rows = read_csv(fs::path(c.out_dir) / "results.csv");
  double prev = 0.0;
  double last_ratio = 0.0;
  double bound = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double w = std::stod(rows[i][6]);
    if (rows[i][0] == "upper_bound") {
      bound = w;
      last_ratio = prev / bound;
      continue;
    }
    EXPECT_GE(w, prev) << rows[i][2];
    prev = w;
  }
  EXPECT_GT(last_ratio, 0.98);
  fs::remove_all(c.out_dir);
}

TEST(Run, PlotScriptIsEmitted) {
  RunConfig c;
  c.out_dir = scratch("plot").string();
  c.plot_script = true;
  c.separation_sweep = {10.0, 12.0, 1.0};
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(run(Command::kSweepD, c, out, err), 0) << err.str();
  const std::string script = slurp(fs::path(c.out_dir) / "plot_results.py");
  EXPECT_NE(script.find("results.csv"), std::string::npos);
  fs::remove_all(c.out_dir);
}

TEST(Run, VerifyAgainstOracle) {
  RunConfig c;
  c.separation = 13.0;
  c.separation_given = true;
  c.oracle_grid = 40;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(Command::kVerify, c, out, err), 0) << err.str() << out.str();
}

TEST(Run, DefaultOutDirFromEnvironment) {
  ::setenv("UAVWPT_OUT_DIR", "/tmp/uavwpt-env-dir", 1);
  EXPECT_EQ(default_out_dir(), "/tmp/uavwpt-env-dir");
  ::unsetenv("UAVWPT_OUT_DIR");
  EXPECT_EQ(default_out_dir(), "results");
}

}  // namespace
}  // namespace uavwpt::cli
