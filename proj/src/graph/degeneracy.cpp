#include "dcc/degeneracy.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace dcc {

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegeneracyOrdering out;
  out.order.resize(n);
  out.position.resize(n);
  out.coreness.assign(n, 0);

  // An ordered set keeps the smallest-id tie-break exact.
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    queue.emplace(deg[v], v);
  }
  std::vector<char> removed(n, 0);
  std::uint32_t running = 0;
  for (std::size_t step = 0; step < n; ++step) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    running = std::max(running, d);
    out.coreness[v] = running;
    out.order[n - 1 - step] = v;
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({deg[u], u});
      queue.emplace(--deg[u], u);
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.position[out.order[i]] = static_cast<std::uint32_t>(i);
  out.degeneracy = running;
  return out;
}

Ragged<Vertex> backward_neighborhoods(const Graph& g, const DegeneracyOrdering& pi) {
  Ragged<Vertex> out;
  std::vector<Vertex> row;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    row.clear();
    for (Vertex u : g.neighbors(v)) {
      if (pi.position[u] < pi.position[v]) row.push_back(u);
    }
    out.push_row(row);
  }
  return out;
}

}  // namespace dcc
