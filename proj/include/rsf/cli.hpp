#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rsf/partition.hpp"

namespace rsf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultMaxSize = 8;
inline constexpr int kSizeCap = 14;

/// Parses "3,1", "[3,1]", "" or "[]". Throws std::invalid_argument on anything else.
Partition parse_partition(const std::string& text);

/// Runs one command; `args` excludes the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsf::cli
