#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace augres {

// Command-line front end. Exit codes:
//   0  all requested checks passed / output produced
//   1  a verification assertion or reproduction fixture failed
//   2  unparseable input or invalid configuration
//   3  resource limit hit (disk cap or face bound)
// The environment variable AUGRESOLVE_CAP overrides the absolute cap on
// boundary events per disk walk; the --cap option overrides both.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace augres
