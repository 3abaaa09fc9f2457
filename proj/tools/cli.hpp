#pragma once

#include <iosfwd>

namespace dcc {

// Entry point of the dcc tool. Returns 0 on success, 1 on a domain error
// (bad input file, invalid cover, failed run) and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcc
