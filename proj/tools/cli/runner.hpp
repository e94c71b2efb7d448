// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "cli/config.hpp"

namespace uavwpt::cli {

enum class Command { kSolve, kSweepD, kSweepT, kVerify };

/// Executes a command. Diagnostics and solve/verify summaries go to `out`
/// and `err`; result files land in config.out_dir (sweeps always, solve only
/// when an output directory is set). Returns the process exit status.
int run(Command command, const RunConfig& config, std::ostream& out, std::ostream& err);

/// Output directory used when none is configured: $UAVWPT_OUT_DIR, else
/// "results".
std::string default_out_dir();

}  // namespace uavwpt::cli
