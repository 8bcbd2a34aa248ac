#pragma once

#include <iosfwd>

namespace respoles {

// Command-line front end (subcommands: poles, kc, stability-map, simulate,
// compare, expansion). Returns the process exit code: 0 success, 2 invalid
// configuration, 3 numerical failure (typed error name printed to err).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace respoles
