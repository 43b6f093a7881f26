#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dx {

// Exit codes: 0 ok, 1 verification failure, 2 scope rejection, 3 input error.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dx
