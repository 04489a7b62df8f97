#pragma once

#include <string>
#include <vector>

#include "qsparse/cli/output.hpp"

namespace qsparse::cli {

/// Names accepted by run_command, in help order.
const std::vector<std::string>& command_names();

/// One-line description for --help.
std::string command_summary(const std::string& command);

/// Validates `config` (unknown keys rejected before any compute), runs the
/// experiment, writes its CSV files and manifest.json under the output
/// directory and returns the bundle. An empty options.out_dir falls back to
/// the config's "output_dir" (default "qsparse_out").
ResultBundle run_command(const std::string& command, const Json& config, const RunOptions& options);

/// Exit status of a finished bundle: selftest fails when any criterion failed.
int bundle_status(const ResultBundle& bundle);

}  // namespace qsparse::cli
