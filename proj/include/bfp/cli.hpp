#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bfp::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUserError = 1;
inline constexpr int kResourceLimit = 2;
inline constexpr int kInternalError = 3;

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bfp::cli
