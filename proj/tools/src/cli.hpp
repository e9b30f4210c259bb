#pragma once

#include <ostream>

namespace ssa::cli {

// Exit codes: 0 success or SSA, 1 domain failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ssa::cli
