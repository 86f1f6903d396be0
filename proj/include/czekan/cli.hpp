#pragma once

#include <string>
#include <vector>

namespace czekan::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kResultsSchemaVersion = 1;

/// Full command-line entry point: diagram | cluster | eval | synth.
/// Returns the process exit code; never throws.
int run(int argc, const char* const* argv);

/// Same, for tests: arguments without the program name.
int run(const std::vector<std::string>& args);

}  // namespace czekan::cli
