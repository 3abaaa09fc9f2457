#pragma once

#include <span>
#include <vector>

#include "dcc/cover.hpp"
#include "dcc/graph.hpp"

namespace dcc::detail {

// The uncovered-neighbor sets M_v, kept as one flag per edge.
class UncoveredEdges {
 public:
  explicit UncoveredEdges(const Graph& g) : g_(g), covered_(g.num_edges(), 0) {}

  bool uncovered(Vertex u, Vertex v) const {
    auto id = g_.edge_id(u, v);
    return id && !covered_[*id];
  }
  bool uncovered_id(EdgeId id) const { return !covered_[id]; }

  // u and v must be adjacent.
  void cover(Vertex u, Vertex v);
  void cover_clique(std::span<const Vertex> c);
  // Every pair {a, b} with a in from, b in to, a != b.
  void cover_between(std::span<const Vertex> from, std::span<const Vertex> to);

  // Uncovered neighbors of v, ascending.
  void uncovered_neighbors(Vertex v, std::vector<Vertex>& out) const;

 private:
  const Graph& g_;
  std::vector<char> covered_;
};

// Identity when order is empty; otherwise order must be a permutation of
// the vertices (std::invalid_argument otherwise).
std::vector<Vertex> resolve_order(const Graph& g, std::span<const Vertex> order);

// Sorts each clique and builds the cover with its dual.
DccRepresentation finish(std::size_t n, std::vector<std::vector<Vertex>>& cliques);

}  // namespace dcc::detail
