#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oneone::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNoCovering = 3, kInternal = 1 };

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oneone::cli
