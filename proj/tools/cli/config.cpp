// SPDX-License-Identifier: Apache-2.0

#include "cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace uavwpt::cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("not a boolean: '" + std::string(text) + "'");
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double v = start + step * static_cast<double>(i);
    if (v > stop + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::kProposed: return "proposed";
    case SchemeId::kUpperBound: return "upper_bound";
    case SchemeId::kOmni: return "omni";
    case SchemeId::kStatic: return "static";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> parse_key_values(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::string(key), std::string(value));
  }
  return out;
}

double parse_real(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  if (s.empty()) throw ConfigError("empty numeric value");
  const auto pi = s.find("pi");
  if (pi == std::string_view::npos) return parse_plain(s, whole);

  double factor = 1.0;
  std::string_view head = trim(s.substr(0, pi));
  if (!head.empty()) {
    if (head.back() != '*') throw ConfigError("bad multiple of pi: '" + std::string(whole) + "'");
    head.remove_suffix(1);
    factor = parse_plain(trim(head), whole);
  }
  double divisor = 1.0;
  std::string_view tail = trim(s.substr(pi + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') throw ConfigError("bad multiple of pi: '" + std::string(whole) + "'");
    divisor = parse_plain(trim(tail.substr(1)), whole);
    if (divisor == 0.0) throw ConfigError("division by zero in '" + std::string(whole) + "'");
  }
  return factor * kPi / divisor;
}

std::vector<SchemeId> parse_schemes(std::string_view text) {
  std::vector<SchemeId> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    std::optional<SchemeId> id;
    for (SchemeId c : {SchemeId::kProposed, SchemeId::kUpperBound, SchemeId::kOmni,
                       SchemeId::kStatic}) {
      if (item == scheme_name(c)) id = c;
    }
    if (!id) throw ConfigError("unknown scheme '" + std::string(item) + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
  }
  if (out.empty()) throw ConfigError("scheme set is empty");
  return out;
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  struct RealKey {
    std::string_view name;
    double RunConfig::*field;
  };
  static const RealKey reals[] = {
      {"D", &RunConfig::separation},     {"T", &RunConfig::duration},
      {"h_min", &RunConfig::h_min},      {"h_max", &RunConfig::h_max},
      {"v_max", &RunConfig::v_max},      {"theta_min", &RunConfig::theta_min},
      {"theta_max", &RunConfig::theta_max}, {"beta0_db", &RunConfig::beta0_db},
      {"p_dbm", &RunConfig::p_dbm},      {"g0", &RunConfig::g0},
      {"dt", &RunConfig::dt},            {"trajectory_step", &RunConfig::trajectory_step},
  };
  for (const auto& r : reals) {
    if (key == r.name) {
      c.*(r.field) = parse_real(value);
      if (key == "D") c.separation_given = true;
      return;
    }
  }
  struct SweepKey {
    std::string_view name;
    SweepSpec RunConfig::*sweep;
    double SweepSpec::*field;
  };
  static const SweepKey sweeps[] = {
      {"D_start", &RunConfig::separation_sweep, &SweepSpec::start},
      {"D_stop", &RunConfig::separation_sweep, &SweepSpec::stop},
      {"D_step", &RunConfig::separation_sweep, &SweepSpec::step},
      {"T_start", &RunConfig::duration_sweep, &SweepSpec::start},
      {"T_stop", &RunConfig::duration_sweep, &SweepSpec::stop},
      {"T_step", &RunConfig::duration_sweep, &SweepSpec::step},
  };
  for (const auto& s : sweeps) {
    if (key == s.name) {
      (c.*(s.sweep)).*(s.field) = parse_real(value);
      return;
    }
  }
  if (key == "schemes") {
    c.schemes = parse_schemes(value);
  } else if (key == "out") {
    c.out_dir = std::string(value);
  } else if (key == "oracle") {
    c.oracle = parse_bool(value);
  } else if (key == "plot_script") {
    c.plot_script = parse_bool(value);
  } else if (key == "oracle_grid") {
    const double n = parse_real(value);
    if (n < 2.0 || n != std::floor(n)) throw ConfigError("oracle_grid must be an integer >= 2");
    c.oracle_grid = static_cast<std::size_t>(n);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void load_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  for (const auto& [key, value] : parse_key_values(buf.str())) {
    try {
      apply_setting(config, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ": " + e.what());
    }
  }
}

void check_config(const RunConfig& c) {
  for (const auto* sweep : {&c.separation_sweep, &c.duration_sweep}) {
    if (!(sweep->step > 0.0)) throw ConfigError("sweep step must be > 0");
    if (sweep->start > sweep->stop) throw ConfigError("sweep start must be <= stop");
  }
  if (c.schemes.empty()) throw ConfigError("scheme set is empty");
  if (!(c.trajectory_step > 0.0)) throw ConfigError("trajectory_step must be > 0");
  if (c.oracle_grid < 2) throw ConfigError("oracle_grid must be >= 2");
  if (!(c.separation > 0.0) || !(c.separation_sweep.start > 0.0)) {
    throw ConfigError("D must be > 0");
  }
  if (!(c.duration > 0.0) || !(c.duration_sweep.start > 0.0)) throw ConfigError("T must be > 0");
  if (!(c.h_min > 0.0) || !(c.h_max > c.h_min)) throw ConfigError("need 0 < h_min < h_max");
  if (!(c.v_max > 0.0)) throw ConfigError("v_max must be > 0");
  if (!(c.theta_min > 0.0) || !(c.theta_min <= c.theta_max) || !(c.theta_max <= kPi / 2.0)) {
    throw ConfigError("need 0 < theta_min <= theta_max <= pi/2");
  }
  if (!(c.g0 > 0.0)) throw ConfigError("g0 must be > 0");
}

}  // namespace uavwpt::cli
