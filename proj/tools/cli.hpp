#pragma once

namespace looplab::cli {

// Parses argv and runs one subcommand.  Exit codes: 0 success, 1 a checked
// claim failed, 2 bad input or an operational error.
int run(int argc, const char* const* argv);

}  // namespace looplab::cli
