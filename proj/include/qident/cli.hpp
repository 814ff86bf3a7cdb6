#pragma once

#include <ostream>

namespace qident {

// Entry point of the `qident` tool, with its streams injectable for tests.
// Returns the process exit code: 0 success, 1 failure or domain error,
// 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qident
