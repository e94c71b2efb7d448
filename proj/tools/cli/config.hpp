// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uavwpt::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inclusive arithmetic progression start, start + step, ... <= stop.
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> values() const;
};

enum class SchemeId { kProposed, kUpperBound, kOmni, kStatic };

std::string_view scheme_name(SchemeId id);

struct RunConfig {
  double separation = 30.0;  // D [m]
  bool separation_given = false;
  double duration = 20.0;    // T [s]
  SweepSpec separation_sweep{2.0, 30.0, 1.0};
  SweepSpec duration_sweep{10.0, 200.0, 10.0};

  double h_min = 10.0;
  double h_max = 30.0;
  double v_max = 5.0;
  double theta_min = 3.14159265358979323846 / 6.0;
  double theta_max = 3.14159265358979323846 / 2.0;

  double beta0_db = -30.0;
  double p_dbm = 40.0;
  double g0 = 2.2846;

  std::vector<SchemeId> schemes{SchemeId::kProposed, SchemeId::kUpperBound, SchemeId::kOmni,
                                SchemeId::kStatic};
  double dt = 0.0;  // <= 0: automatic
  std::string out_dir;
  bool oracle = false;
  std::size_t oracle_grid = 80;
  bool plot_script = false;
  double trajectory_step = 0.1;
};

/// `key = value` lines, `#` starts a comment. Keys are returned in file order.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text);

/// Applies one setting; throws ConfigError on unknown keys or bad values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Numbers, optionally written as multiples of pi: `0.5`, `pi/6`, `2*pi/3`.
double parse_real(std::string_view text);

std::vector<SchemeId> parse_schemes(std::string_view text);

/// Reads a config file and applies every setting in order.
void load_config_file(RunConfig& config, const std::string& path);

/// Cross-field checks: sweep specs ordered with positive step, nonempty
/// scheme set, positive grid and sampling step.
void check_config(const RunConfig& config);

}  // namespace uavwpt::cli
