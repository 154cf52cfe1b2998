#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betasimplex/angle_sums.hpp"
#include "betasimplex/report.hpp"

namespace betasimplex::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kNumericalFailure = 3,
};

/// Environment variable consulted for the default worker count.
inline constexpr const char* kWorkersEnv = "BETASIMPLEX_WORKERS";

/// Parses a decimal beta. "-1" in any decimal spelling maps to the sphere
/// sentinel exactly; anything below -1 or malformed throws DomainError.
BetaParam parse_beta(std::string_view text);

/// Worker count from kWorkersEnv, if set to a non-negative integer.
std::optional<int> workers_from_env();

/// Runs the command line (args exclude the program name), writing the report
/// to out (or the --out file) and diagnostics to err. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betasimplex::cli
