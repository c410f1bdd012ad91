#pragma once

// The `kdom` command line. Kept as a library entry point so tests can drive it
// with in-memory streams.
//
// Exit codes: 0 success, 1 verification negative, 2 input or domain error,
// 3 budget exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

/// `args` excludes the program name. "-" as a file argument reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "A:B" or "A:B:S" (S > 0). A > B yields an empty range.
std::vector<std::int64_t> parse_range(const std::string& text);

}  // namespace kdom::cli
