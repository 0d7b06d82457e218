#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binharm::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (program name excluded). Reports go to `out`,
// diagnostics to `err`. Returns 0 when every check passed, 1 when some
// check failed, 2 on usage or validation errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binharm::cli
