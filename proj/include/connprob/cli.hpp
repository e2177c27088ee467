#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace connprob::cli {

// Runs the full command-line tool on the given arguments (argv[0] excluded).
// Writes results to `out` and error messages to `err`.
// Exit codes: 0 success, 1 domain/data error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace connprob::cli
