#pragma once

#include <string>
#include <vector>

namespace tww {

// Entry point behind the `tww` binary; args excludes the program name.
// Returns the process exit code: 0 success / verification passed,
// 1 verification failed or an internal invariant broke, 2 bad input.
int cli_main(const std::vector<std::string>& args);

}  // namespace tww
