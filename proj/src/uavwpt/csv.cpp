// SPDX-License-Identifier: Apache-2.0

#include "uavwpt/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "uavwpt/energy.hpp"
#include "uavwpt/relaxed_solver.hpp"

namespace uavwpt::csv {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

std::string results_row(std::string_view scheme, double separation, double duration,
                        const EnergyReport& r) {
  std::string row(scheme);
  for (double v : {separation, duration, r.e1, r.e2, r.common, r.normalized_common}) {
    row += ',';
    row += format_number(v);
  }
  return row;
}

std::string solver_row(double separation, const HoverSolution& sol) {
  std::string row = format_number(separation);
  for (double v : {sol.x_bar, sol.h_bar, sol.theta_bar}) {
    row += ',';
    row += format_number(v);
  }
  row += ',';
  row += to_string(sol.case_tag);
  row += ',';
  row += format_number(sol.value);
  return row;
}

}  // namespace uavwpt::csv
