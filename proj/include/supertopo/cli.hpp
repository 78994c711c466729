#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supertopo::cli {

/// Runs one command line (without the program name). Certificates and
/// contract diagnostics go to `out`, usage and input errors to `err`.
/// Returns 0, 1 (malformed input), 2 (contract violation) or 64 (usage).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supertopo::cli
