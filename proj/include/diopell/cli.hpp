#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diopell::cli {

// Dispatches one subcommand invocation. Results go to `out` (JSON lines by
// default, human-readable with --human), diagnostics to `err`.
// Exit code: 0 completed with no violations, 1 violations found (verify) or
// missing solution under --expect-solution (evaluate), 2 usage/domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diopell::cli
