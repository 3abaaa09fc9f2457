#pragma once

#include <span>

#include "dcc/cover.hpp"
#include "dcc/graph.hpp"

namespace dcc {

struct CoverStats {
  std::size_t num_cliques = 0;
  std::size_t assignments = 0;      // size(C)
  std::size_t max_clique_size = 0;  // lower bound on the clique number
  double compression_ratio = 0.0;   // 2m / size(C); 0 for an empty cover
  // 2m / sum over v with core(v) > 0 of ceil(deg(v) / core(v)); 0 when m = 0.
  double ub_opt = 0.0;
  std::size_t min_assignments = 0;  // the denominator above
};

// coreness as produced by degeneracy_ordering.
CoverStats cover_stats(const Graph& g, const CliqueCover& cover, std::span<const std::uint32_t> coreness);

}  // namespace dcc
