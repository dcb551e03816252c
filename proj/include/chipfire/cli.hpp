#pragma once

#include <iosfwd>

namespace chipfire {

/// Command-line entry point, separated from main() so tests can drive it.
/// Exit codes: 0 success, 1 usage error, 2 domain/contract error, 3 audit
/// violation, 4 budget exhausted.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chipfire
