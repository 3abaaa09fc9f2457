#include "coverage.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dcc::detail {

void UncoveredEdges::cover(Vertex u, Vertex v) {
  auto id = g_.edge_id(u, v);
  if (!id) throw std::logic_error("covering non-edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  covered_[*id] = 1;
}

void UncoveredEdges::cover_clique(std::span<const Vertex> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) cover(c[i], c[j]);
  }
}

void UncoveredEdges::cover_between(std::span<const Vertex> from, std::span<const Vertex> to) {
  for (Vertex a : from) {
    for (Vertex b : to) {
      if (a != b) cover(a, b);
    }
  }
}

void UncoveredEdges::uncovered_neighbors(Vertex v, std::vector<Vertex>& out) const {
  out.clear();
  auto nb = g_.neighbors(v);
  auto ids = g_.neighbor_edge_ids(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (!covered_[ids[i]]) out.push_back(nb[i]);
  }
}

std::vector<Vertex> resolve_order(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> out;
  if (order.empty()) {
    out.resize(n);
    for (Vertex v = 0; v < n; ++v) out[v] = v;
    return out;
  }
  if (order.size() != n) throw std::invalid_argument("vertex order must list every vertex once");
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("vertex order is not a permutation");
    seen[v] = 1;
  }
  return {order.begin(), order.end()};
}

DccRepresentation finish(std::size_t n, std::vector<std::vector<Vertex>>& cliques) {
  CliqueCover cover(n);
  for (auto& c : cliques) {
    std::sort(c.begin(), c.end());
    cover.add_clique(c);
  }
  return DccRepresentation::from_cover(std::move(cover));
}

}  // namespace dcc::detail
