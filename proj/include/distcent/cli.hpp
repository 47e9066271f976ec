#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace distcent::cli {

/// Environment variable naming the directory that relative output paths
/// (and default output file names) resolve against.
inline constexpr const char* kOutputDirEnv = "DISTCENT_OUTPUT_DIR";

/// Parses "start:step:end" into an inclusive alpha grid.
std::vector<double> parse_alpha_grid(const std::string& spec);

/// Entry point shared by the executable and the tests. Results go to the
/// requested files or to `out`; diagnostics go to `err` only. Returns 0
/// only when every requested computation completed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distcent::cli
