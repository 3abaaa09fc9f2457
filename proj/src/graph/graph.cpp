#include "dcc/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "dcc/degeneracy.hpp"

namespace dcc {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoVertex) throw std::invalid_argument("too many vertices");
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                                  " out of range for n=" + std::to_string(n));
    }
    if (e.u != e.v) es.push_back(normalized(e));
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  if (es.size() >= std::numeric_limits<EdgeId>::max()) throw std::invalid_argument("too many edges");

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (Edge e : es) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adj_.resize(2 * es.size());
  g.edge_ids_.resize(2 * es.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v): pushing v into u's list and u into v's list
  // in this order leaves every list sorted (lower neighbors first).
  for (std::size_t id = 0; id < es.size(); ++id) {
    const Edge e = es[id];
    g.adj_[fill[e.v]] = e.u;
    g.edge_ids_[fill[e.v]++] = static_cast<EdgeId>(id);
  }
  for (std::size_t id = 0; id < es.size(); ++id) {
    const Edge e = es[id];
    g.adj_[fill[e.u]] = e.v;
    g.edge_ids_[fill[e.u]++] = static_cast<EdgeId>(id);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(num_vertices()));
  }
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (u >= num_vertices() || v >= num_vertices() || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return edge_ids_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

bool Graph::has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  if (s.n > 0) {
    s.min_degree = g.degree(0);
    for (Vertex v = 0; v < s.n; ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.degeneracy = degeneracy_ordering(g).degeneracy;
  const std::uint64_t n = s.n;
  s.clique_distance = (n * (n - (n > 0 ? 1 : 0))) / 2 - s.m + 1;
  return s;
}

}  // namespace dcc
