#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcc/cover.hpp"
#include "dcc/types.hpp"

namespace dcc {

// Algorithms over a DCC representation. Each works on the cover universe
// V = union of the cliques; vertices outside it get the "none" value of the
// respective result (unreached, no component, color 0, core 0, ...).

inline constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();
inline constexpr std::uint32_t kNoComponent = std::numeric_limits<std::uint32_t>::max();

struct BfsResult {
  std::vector<std::uint32_t> dist;  // kInfinity when unreached
  std::vector<Vertex> parent;       // kNoVertex for the source and unreached vertices
  std::vector<Vertex> order;        // dequeue order
  std::size_t cliques_scanned = 0;
};

// Throws std::out_of_range when s >= n.
BfsResult bfs(const DccRepresentation& dcc, Vertex s);

struct Forest {
  std::vector<Vertex> parent;  // kNoVertex for roots and vertices outside V
  std::vector<Vertex> roots;   // ascending
};

// BFS from each undiscovered vertex of V in ascending order.
Forest bfs_forest(const DccRepresentation& dcc);

// Depth-first forest; roots tried in ascending order, each clique keeps one
// cursor across the whole traversal.
Forest dfs_forest(const DccRepresentation& dcc);

// G[V] has no path between u() and v().
class DisconnectedGraphError : public std::domain_error {
 public:
  DisconnectedGraphError(Vertex u, Vertex v)
      : std::domain_error("graph is disconnected: no path between vertices " + std::to_string(u) + " and " +
                          std::to_string(v) + " (0-based)"),
        u_(u), v_(v) {}
  Vertex u() const { return u_; }
  Vertex v() const { return v_; }

 private:
  Vertex u_, v_;
};

struct Eccentricities {
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  std::vector<Vertex> center;            // ascending
  std::vector<std::uint32_t> eccentricity;  // kInfinity outside V
};

// One BFS per vertex of V. Throws DisconnectedGraphError if G[V] is
// disconnected and std::domain_error on an empty cover.
Eccentricities eccentricity_sweep(const DccRepresentation& dcc);

struct Components {
  std::vector<std::uint32_t> label;  // kNoComponent outside V
  std::size_t count = 0;
  std::vector<Edge> forest;          // one edge per successful union
};

// Uses the cliques only. Labels are 0..count-1, numbered by smallest member.
Components connected_components(const CliqueCover& cover);

struct Matching {
  std::vector<Edge> edges;            // normalized
  std::vector<Vertex> vertex_cover;   // matched endpoints, ascending
};

// Pairs up the unmatched members of each clique in ascending order; an odd
// leftover stays unmatched. Uses the cliques only.
Matching maximal_matching(const CliqueCover& cover);

// Greedy over V in ascending order.
std::vector<Vertex> maximal_independent_set(const DccRepresentation& dcc);

// First-fit coloring visiting `order` (distinct vertices). Colors are
// 1-based; vertices not in the order get 0.
std::vector<std::uint32_t> first_fit_coloring(const DccRepresentation& dcc, std::span<const Vertex> order);

// First-fit coloring of the complement graph, same conventions.
std::vector<std::uint32_t> ff_complement_coloring_dcc(const DccRepresentation& dcc, std::span<const Vertex> order);

struct CorenessResult {
  std::vector<std::uint32_t> core;
  std::uint32_t degeneracy = 0;
  std::vector<Vertex> peel_order;  // extraction order over V
};

CorenessResult k_core_decomposition(const DccRepresentation& dcc);

struct DensestSubgraph {
  std::vector<Vertex> vertices;  // {v : core(v) = degeneracy}, ascending
  std::size_t edges = 0;         // |E(G[S])|
  double density = 0.0;          // edges / |S|
};

// Throws std::domain_error when the cover is empty.
DensestSubgraph densest_subgraph_2approx(const DccRepresentation& dcc);
DensestSubgraph densest_subgraph_2approx(const DccRepresentation& dcc, const CorenessResult& cores);

// Grows the largest cover clique (lowest label on ties) by candidates taken
// in ascending order. Throws std::domain_error on an empty cover.
std::vector<Vertex> maximal_clique(const DccRepresentation& dcc);

}  // namespace dcc
