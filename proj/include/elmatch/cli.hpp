#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elmatch {

// Command-line entry point, stream-injected for tests. args excludes the
// program name. Results go to out, diagnostics and errors to err. Returns 0
// on success, 1 when input or reasoning problems were diagnosed, and 2 on
// usage mistakes (unknown flags, missing arguments or files).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elmatch
