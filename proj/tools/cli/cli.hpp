#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linperiod::cli {

enum ExitCode : int {
    success = 0,
    verification_failed = 1,
    usage_error = 2,
};

// args excludes the program name. Subcommands: schur, weights, perm,
// split-check, verify-identity, local-factor, unramified-integral, partial-l,
// real-part.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linperiod::cli
