#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccpair {

// Dispatches a CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 domain/validation failure (with a JSON
// error object on stdout), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ccpair
