#include "dcc/cover_stats.hpp"

#include <stdexcept>

namespace dcc {

CoverStats cover_stats(const Graph& g, const CliqueCover& cover, std::span<const std::uint32_t> coreness) {
  if (coreness.size() != g.num_vertices()) throw std::invalid_argument("coreness has the wrong length");
  CoverStats s;
  s.num_cliques = cover.num_cliques();
  s.assignments = cover.size();
  s.max_clique_size = cover.max_clique_size();
  const double twice_m = 2.0 * static_cast<double>(g.num_edges());
  if (s.assignments > 0) s.compression_ratio = twice_m / static_cast<double>(s.assignments);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (coreness[v] == 0) continue;
    s.min_assignments += (g.degree(v) + coreness[v] - 1) / coreness[v];
  }
  if (s.min_assignments > 0) s.ub_opt = twice_m / static_cast<double>(s.min_assignments);
  return s;
}

}  // namespace dcc
