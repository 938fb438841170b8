#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milgrowth::cli {

/// Parse and run one CLI invocation (argv without the program name).
/// Results go to `out`, diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 validation error, 2 computation error.
/// Output files (--out, --plot) are written only after all validation and
/// computation succeeded, so a failing run leaves no partial files.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace milgrowth::cli
