#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqid::cli {

enum Exit : int { kOk = 0, kViolation = 1, kUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The fixed demo command lines run by the `corpus` subcommand.
std::vector<std::vector<std::string>> corpus_commands();

}  // namespace fqid::cli
