#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trop::cli {

// Runs one CLI command; returns the process exit status:
// 0 ok, 1 usage, 2 validation failure, 3 expected-result mismatch,
// 4 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trop::cli
