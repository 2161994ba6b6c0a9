#pragma once

#include <string>
#include <vector>

namespace gmfq {

// Full command-line surface; args excludes the program name.  Returns the
// process exit code: 0 success / verified, 1 usage error, 2 data error,
// 3 verification failure.  Kept in the library so tests can drive the CLI
// in-process.
int run_cli(std::vector<std::string> args);

} // namespace gmfq
