#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dcc/types.hpp"

namespace dcc {

// Simple undirected graph in CSR form. Adjacency lists are sorted and
// symmetric; there are no self-loops or parallel edges.
class Graph {
 public:
  Graph() : offsets_{0} {}

  // Drops self-loops, merges duplicates and symmetrizes.
  // Throws std::invalid_argument on an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> neighbor_edge_ids(Vertex v) const {
    return {edge_ids_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(Vertex u, Vertex v) const;
  // Ids run over edges in lexicographic (u < v) order.
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  // All edges, normalized, in lexicographic order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<EdgeId> edge_ids_;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::uint32_t degeneracy = 0;
  // C(n,2) - m + 1
  std::uint64_t clique_distance = 0;
};

GraphStats graph_stats(const Graph& g);

}  // namespace dcc
