#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsrd {

// Command-line driver. Exit codes: 0 success, 1 violations / invalid
// labeling, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsrd
