#pragma once

#include <iosfwd>

#include "gravent/config.hpp"

namespace gravent::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kNumericalFailure = 2,
};

/// Name of the environment variable pointing at a constants-only document.
inline constexpr const char* kConstantsEnvVar = "GRAVENT_CONSTANTS";

/// Executes a validated config. Data goes to the configured path (or `out`
/// for "-"); diagnostics go to `err` unless quiet.
int run(const RunConfig& config, std::ostream& out, std::ostream& err, bool quiet = false);

/// Entry point used by the gravent executable.
int main(int argc, char** argv);

}  // namespace gravent::cli
