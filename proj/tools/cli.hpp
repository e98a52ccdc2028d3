#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicross {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Reals for lambda and scan grids: decimals, "p/q", "pi", "k*pi", "k/pi".
double parse_real(const std::string& text);

}  // namespace bicross
