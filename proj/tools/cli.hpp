#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "korder/order.hpp"

namespace korder::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // a verification or sweep found a violation
inline constexpr int kExitUsage = 2;   // bad flags, unparsable values, or a domain error

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a+bi", "a-bi", "a", "bi", "i" or "-i" with decimal literals.
/// Throws std::invalid_argument on anything else.
Complex parse_complex(std::string_view text);

}  // namespace korder::cli
