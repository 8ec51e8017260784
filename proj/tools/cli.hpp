#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minkhelix::cli {

/// Exit codes: 0 success, 1 domain or usage errors (and a failed validation
/// verdict), 2 file I/O and file format errors.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIO = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minkhelix::cli
