#pragma once

#include <filesystem>
#include <iosfwd>

#include "dcc/errors.hpp"
#include "dcc/graph.hpp"

namespace dcc {

// Text format: '%' comment lines, a header "n m", then m lines "u v" with
// 1-based endpoints. Throws ParseError with the offending line.
Graph read_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);

void write_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace dcc
