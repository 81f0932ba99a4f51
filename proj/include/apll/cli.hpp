#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "apll/abelian_group.hpp"

namespace apll::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kLimit = 3 };

/// Runs one subcommand. `args` excludes the program name. Primary output
/// goes to `out` unless --out names a file (written via a temporary file and
/// rename); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Element list as given on the command line. Elements are separated by ';'
/// ("1,0;0,5"); without ';' the comma-separated integers are grouped by the
/// rank of the group, so "0,2,3,11,12" in C14 is five elements.
std::vector<GroupElement> parse_element_list(const GroupSpec& g, std::string_view text);

}  // namespace apll::cli
