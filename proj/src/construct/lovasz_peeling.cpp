#include <algorithm>
#include <utility>

#include "coverage.hpp"
#include "dcc/constructors.hpp"

namespace dcc {

DccRepresentation lovasz_peeling(const Graph& g, std::span<const Vertex> order) {
  const auto ord = detail::resolve_order(g, order);
  const ColorClasses f = ff_complement_color_classes(g, ord);
  std::vector<std::vector<Vertex>> cliques;
  for (const auto& c : f.classes) {
    if (c.size() >= 2) cliques.push_back(c);
  }
  std::vector<std::pair<std::uint32_t, Vertex>> earlier;
  for (Vertex v : ord) {
    const std::uint32_t k = f.color[v];
    earlier.clear();
    for (Vertex u : g.neighbors(v)) {
      if (f.color[u] < k) earlier.emplace_back(f.color[u], u);
    }
    std::sort(earlier.begin(), earlier.end());
    for (std::size_t i = 0; i < earlier.size();) {
      std::vector<Vertex> c{v};
      std::size_t j = i;
      for (; j < earlier.size() && earlier[j].first == earlier[i].first; ++j) c.push_back(earlier[j].second);
      cliques.push_back(std::move(c));
      i = j;
    }
  }
  return detail::finish(g.num_vertices(), cliques);
}

}  // namespace dcc
