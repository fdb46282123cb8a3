#pragma once

#include <iosfwd>

namespace ffnets {

/* End-to-end acceptance suite; one verdict line per criterion.
 * Returns 0 iff every criterion passes. */
int run_acceptance(bool quick, std::ostream& out);

}  // namespace ffnets
