#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bwperm::cli {

// Runs one subcommand. args excludes the program name. Returns the exit code:
// 0 on success, 1 on a crosscheck mismatch, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bwperm::cli
