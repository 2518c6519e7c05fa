// cli.hpp
// Command-line front end.  Subcommands: check, invert, young-sweep, regions,
// search, simulate.
//
// Exit codes: 0 success (for `check`: classically consistent), 1 input error,
// 2 inadmissible measurement model, 3 violation detected by `check`,
// 4 internal consistency failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace complab {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace complab
