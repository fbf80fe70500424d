#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baxterlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // contract or verification failure
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baxterlab::cli
