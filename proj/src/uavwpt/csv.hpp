// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace uavwpt {
struct EnergyReport;
struct HoverSolution;
}  // namespace uavwpt

namespace uavwpt::csv {

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_number(double v);

inline constexpr std::string_view kResultsHeader =
    "scheme,D_m,T_s,E1_J,E2_J,common_J,normalized_W";
inline constexpr std::string_view kSolverHeader =
    "D_m,x_bar_m,h_bar_m,theta_bar_rad,case,value_W";

std::string results_row(std::string_view scheme, double separation, double duration,
                        const EnergyReport& report);

std::string solver_row(double separation, const HoverSolution& sol);

}  // namespace uavwpt::csv
