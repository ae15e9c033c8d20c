#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strongl::cli {

enum Exit : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs one command line (args exclude the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strongl::cli
