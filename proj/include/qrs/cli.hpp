#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrs::cli {

// Runs one CLI invocation. Exit codes: 0 success / true verdict,
// 1 mathematical false verdict, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrs::cli
