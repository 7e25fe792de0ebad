#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmac::cli {

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 on success, 2 on flag/usage errors, 3 on domain errors; error
/// paths print a single line to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace qmac::cli
