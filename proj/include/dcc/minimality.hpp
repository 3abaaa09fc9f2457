#pragma once

#include "dcc/cover.hpp"
#include "dcc/graph.hpp"

namespace dcc {

// Outcome of a minimality check. On failure the witness fields are set:
//  inclusion:   clique is contained in other
//  support:     clique covers no edge on its own
//  composition: clique and other merge into a clique
//  assignment:  vertex can be removed from clique
struct MinimalityCheck {
  bool minimal = true;
  Label clique = kNoLabel;
  Label other = kNoLabel;
  Vertex vertex = kNoVertex;

  explicit operator bool() const { return minimal; }
};

// All four checks throw std::invalid_argument if the cover is not valid for g.
MinimalityCheck is_inclusion_minimal(const Graph& g, const CliqueCover& cover);
MinimalityCheck is_support_minimal(const Graph& g, const CliqueCover& cover);
// Quadratic in the number of cliques.
MinimalityCheck is_composition_minimal(const Graph& g, const CliqueCover& cover);
MinimalityCheck is_assignment_minimal(const Graph& g, const CliqueCover& cover);

// Greedily drops vertex-clique assignments whose edges stay covered, scanning
// cliques and their vertices ascending. Cliques left with fewer than two
// vertices are deleted. Throws std::invalid_argument on an invalid cover.
CliqueCover make_assignment_minimal(const Graph& g, const CliqueCover& cover);

}  // namespace dcc
