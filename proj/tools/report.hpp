#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finst::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finst::cli
