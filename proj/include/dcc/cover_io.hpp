#pragma once

#include <filesystem>
#include <iosfwd>

#include "dcc/cover.hpp"
#include "dcc/errors.hpp"

namespace dcc {

// Text format: '%' comment lines, a header "n k s" (vertices, cliques,
// assignments), then k lines of ascending 1-based vertex ids.
CliqueCover read_cover(std::istream& in);
CliqueCover load_cover(const std::filesystem::path& path);

void write_cover(const CliqueCover& cover, std::ostream& out);
void save_cover(const CliqueCover& cover, const std::filesystem::path& path);

}  // namespace dcc
