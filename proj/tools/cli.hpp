#pragma once

#include <iosfwd>

namespace rootedpoly::cli {

/// Exit codes of the rootedpoly command.
enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kInput = 2,
  kCap = 3,
  kVerifyFailed = 4,
};

/// Runs `rootedpoly` with argv[0] the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rootedpoly::cli
