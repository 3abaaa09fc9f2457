#include <algorithm>
#include <stdexcept>

#include "dcc/algorithms.hpp"

namespace dcc {

CorenessResult k_core_decomposition(const DccRepresentation& dcc) {
  const std::size_t n = dcc.num_vertices();
  const auto universe = cover_universe(dcc.cover);
  CorenessResult out;
  out.core.assign(n, 0);
  std::vector<std::uint32_t> deg(n, 0), seen(n, 0);
  std::uint32_t t = 0;
  for (Vertex v : universe) {
    ++t;
    for (Label l : dcc.dual.labels(v)) {
      for (Vertex u : dcc.cover.clique(l)) {
        if (u == v || seen[u] == t) continue;
        seen[u] = t;
        ++deg[v];
      }
    }
  }

  // Bucket queue: vert is sorted by current degree, bin[d] is the first slot
  // of degree d, pos[v] is the slot of v.
  std::uint32_t max_deg = 0;
  for (Vertex v : universe) max_deg = std::max(max_deg, deg[v]);
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (Vertex v : universe) ++bin[deg[v] + 1];
  for (std::size_t d = 0; d <= max_deg; ++d) bin[d + 1] += bin[d];
  std::vector<Vertex> vert(universe.size());
  std::vector<std::size_t> pos(n, 0);
  {
    std::vector<std::size_t> fill(bin.begin(), bin.end() - 1);
    for (Vertex v : universe) {
      pos[v] = fill[deg[v]]++;
      vert[pos[v]] = v;
    }
  }
  std::vector<char> alive(n, 0);
  for (Vertex v : universe) alive[v] = 1;

  for (std::size_t i = 0; i < vert.size(); ++i) {
    const Vertex v = vert[i];
    out.core[v] = deg[v];
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    out.peel_order.push_back(v);
    alive[v] = 0;
    ++t;
    for (Label l : dcc.dual.labels(v)) {
      for (Vertex u : dcc.cover.clique(l)) {
        if (!alive[u] || seen[u] == t) continue;
        seen[u] = t;
        if (deg[u] <= deg[v]) continue;
        // Swap u with the first vertex of its bucket, then shrink the bucket.
        const std::uint32_t du = deg[u];
        const std::size_t pw = bin[du];
        const Vertex w = vert[pw];
        std::swap(vert[pos[u]], vert[pw]);
        std::swap(pos[u], pos[w]);
        ++bin[du];
        --deg[u];
      }
    }
  }
  return out;
}

DensestSubgraph densest_subgraph_2approx(const DccRepresentation& dcc) {
  return densest_subgraph_2approx(dcc, k_core_decomposition(dcc));
}

DensestSubgraph densest_subgraph_2approx(const DccRepresentation& dcc, const CorenessResult& cores) {
  const auto universe = cover_universe(dcc.cover);
  if (universe.empty()) throw std::domain_error("densest subgraph of an empty graph");
  DensestSubgraph out;
  std::vector<char> in_s(dcc.num_vertices(), 0);
  for (Vertex v : universe) {
    if (cores.core[v] == cores.degeneracy) {
      out.vertices.push_back(v);
      in_s[v] = 1;
    }
  }
  std::size_t twice = 0;
  for (Vertex v : out.vertices) {
    for (Vertex u : neighborhood_query(dcc, v)) twice += in_s[u];
  }
  out.edges = twice / 2;
  out.density = static_cast<double>(out.edges) / static_cast<double>(out.vertices.size());
  return out;
}

}  // namespace dcc
