#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frontis {

/// Exit status: 0 all checks passed, 1 a checked property failed,
/// 2 usage, parse or guard errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frontis
