#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace radwave::cli {

enum ExitCode { kOk = 0, kUsage = 1, kViolation = 2 };

/// Runs `command` ("constants", "free", "verify theta", ...) with the given
/// configuration, writing output files under the `out` directory together with
/// manifest.txt. Human-readable progress goes to `log`.
int run_command(const std::string& command, RunConfig& cfg, std::ostream& log);

/// The commands accepted by run_command.
const std::vector<std::string>& command_names();

}  // namespace radwave::cli
