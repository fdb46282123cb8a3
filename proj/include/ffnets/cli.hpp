#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffnets {

/* Full command-line surface; args exclude the program name.  Output and
 * diagnostics go to the given streams so runs are capturable in tests. */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ffnets
