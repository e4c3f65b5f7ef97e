#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apsp {

// Runs one CLI invocation; `args` excludes the program name. Exit codes:
// 0 success, 1 input/usage error, 2 negative cycle detected (distances are
// still emitted, with -inf entries).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apsp
