#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcoo::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kIoError = 1, kUsage = 2, kVerifyFailed = 3 };

/// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcoo::cli
