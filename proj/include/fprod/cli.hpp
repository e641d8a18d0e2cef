#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fprod::cli {

// Exit status contract.
enum ExitCode : int {
  kSuccess = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kInternal = 3,
};

struct Options {
  // ANSI colour for PASS/FAIL in text mode.
  bool color = false;
};

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options = {});

}  // namespace fprod::cli
