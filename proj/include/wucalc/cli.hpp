#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wucalc {

// Exit codes: 0 success, 1 usage or input error, 2 a reported check failed.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wucalc
