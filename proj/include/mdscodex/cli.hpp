#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mdscodex {

/// Parses and runs one command line (without the program name). Reports go
/// to `out`, diagnostics to `err`. Exit status: 0 success, 1 verification
/// failure (with a machine-readable witness on stdout), 2 usage or I/O error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mdscodex
