#pragma once

#include <vector>

#include "dcc/graph.hpp"
#include "dcc/ragged.hpp"

namespace dcc {

// Degeneracy ordering pi. Vertices are peeled by minimum remaining degree
// (ties: smallest id) and pi lists them in reverse peel order, so every
// vertex has at most `degeneracy` neighbors earlier in pi.
struct DegeneracyOrdering {
  std::vector<Vertex> order;            // pi[0] was peeled last
  std::vector<std::uint32_t> position;  // position[v] = index of v in order
  std::vector<std::uint32_t> coreness;
  std::uint32_t degeneracy = 0;
};

DegeneracyOrdering degeneracy_ordering(const Graph& g);

// N^<(v): neighbors of v that precede v in pi, sorted by id.
Ragged<Vertex> backward_neighborhoods(const Graph& g, const DegeneracyOrdering& pi);

}  // namespace dcc
