#pragma once

// Command-line dispatch. Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace flocks {

/// args excludes the program name.
int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace flocks
