#pragma once

#include <string>
#include <vector>

namespace graphgeom::cli {

/// Parses and runs one toolkit command (args exclude the program name).
/// Exit codes: 0 success, 1 verification failure, 2 input error,
/// 3 internal numeric error.
int run_command(const std::vector<std::string>& args);

}  // namespace graphgeom::cli
