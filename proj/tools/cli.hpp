#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mforge::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // a gated identity or b-file check failed
inline constexpr int kExitUsage = 2;        // bad flags or invalid parameters
inline constexpr int kExitRuntime = 3;      // I/O or arithmetic failure

/// Data goes to `out` unless --out names a file; logs go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace mforge::cli
