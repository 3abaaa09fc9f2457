#pragma once

#include <span>
#include <vector>

#include "dcc/algorithms.hpp"
#include "dcc/graph.hpp"

namespace dcc {

// Textbook algorithms over adjacency lists, with the same result types and
// conventions as the DCC versions. Where those range over the cover
// universe, these range over the non-isolated vertices, which is the
// universe of every valid cover without singleton cliques.

BfsResult baseline_bfs(const Graph& g, Vertex s);
Forest baseline_bfs_forest(const Graph& g);
Forest baseline_dfs_forest(const Graph& g);
Eccentricities baseline_eccentricity_sweep(const Graph& g);
Components baseline_components(const Graph& g);
// Greedy over edges in lexicographic order.
Matching baseline_matching(const Graph& g);
std::vector<Vertex> baseline_mis(const Graph& g);
std::vector<std::uint32_t> baseline_coloring(const Graph& g, std::span<const Vertex> order);
CorenessResult baseline_kcore(const Graph& g);
DensestSubgraph baseline_densest_subgraph(const Graph& g);
// Greedy from the smallest non-isolated vertex.
std::vector<Vertex> baseline_maximal_clique(const Graph& g);

}  // namespace dcc
