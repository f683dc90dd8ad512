#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace seqlab::cli {

/// Exit codes: 0 success, 1 a requested check failed or the analysis could not
/// be carried out, 2 usage error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Horizon guard, 10^7 unless SEQLAB_MAX_HORIZON is set.
std::size_t max_horizon();

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqlab::cli
