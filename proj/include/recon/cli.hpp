#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recon::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

/// Runs one command line (without the program name). Reports go to `out`,
/// library errors are rendered there as `ERROR <code> <detail>`; `in` feeds
/// the oracle subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in);

}  // namespace recon::cli
