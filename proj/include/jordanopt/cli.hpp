#pragma once

// Command-line entry point, callable from tests without spawning a process.
// Returns 0 when all requested checks pass, 1 when a verification fails,
// and 2 on malformed input.

namespace jordanopt {

int cli_run(int argc, char** argv);

}  // namespace jordanopt
