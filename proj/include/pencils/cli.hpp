#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pencils::cli {

/// Runs one command line (without the program name). Returns 0 on success, 2 on a domain error
/// (an error object is written to the output) and 1 on usage, parse or I/O failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pencils::cli
