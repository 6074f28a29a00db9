#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padicfrac::experiment {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailure = 1;
inline constexpr int kExitBadInput = 2;

/// Entry point behind the `padicfrac` binary. args excludes the program
/// name. Subcommands: expand, table, audit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padicfrac::experiment
