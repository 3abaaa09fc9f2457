#pragma once

#include <string>
#include <vector>

#include "dcc/cover.hpp"
#include "dcc/graph.hpp"

namespace dcc {

struct NonCliqueWitness {
  Label clique = kNoLabel;
  Edge non_edge;
};

// Empty report means the cover is a valid clique cover of the graph.
struct ValidationReport {
  std::vector<NonCliqueWitness> non_cliques;
  std::vector<Edge> uncovered;

  bool valid() const { return non_cliques.empty() && uncovered.empty(); }
  // Human-readable summary with 1-based ids, listing at most max_items of each kind.
  std::string describe(std::size_t max_items = 5) const;
};

// Throws std::invalid_argument when the vertex counts differ.
ValidationReport validate_cover(const Graph& g, const CliqueCover& cover);

// Number of cliques covering each edge, indexed by Graph::edge_id.
// Pairs that are not edges are ignored.
std::vector<std::uint32_t> edge_coverage_counts(const Graph& g, const CliqueCover& cover);

}  // namespace dcc
