#include "dcc/baseline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dcc {
namespace {

std::vector<Vertex> active_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) out.push_back(v);
  }
  return out;
}

// Runs BFS from s on top of existing dist/parent state; appends to order.
void bfs_into(const Graph& g, Vertex s, std::vector<std::uint32_t>& dist, std::vector<Vertex>& parent,
              std::vector<Vertex>& order) {
  std::size_t head = order.size();
  dist[s] = 0;
  order.push_back(s);
  while (head < order.size()) {
    const Vertex v = order[head++];
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] != kInfinity) continue;
      dist[u] = dist[v] + 1;
      parent[u] = v;
      order.push_back(u);
    }
  }
}

}  // namespace

BfsResult baseline_bfs(const Graph& g, Vertex s) {
  g.check_vertex(s);
  BfsResult r;
  r.dist.assign(g.num_vertices(), kInfinity);
  r.parent.assign(g.num_vertices(), kNoVertex);
  bfs_into(g, s, r.dist, r.parent, r.order);
  return r;
}

Forest baseline_bfs_forest(const Graph& g) {
  Forest f;
  std::vector<std::uint32_t> dist(g.num_vertices(), kInfinity);
  f.parent.assign(g.num_vertices(), kNoVertex);
  std::vector<Vertex> order;
  for (Vertex v : active_vertices(g)) {
    if (dist[v] != kInfinity) continue;
    f.roots.push_back(v);
    bfs_into(g, v, dist, f.parent, order);
  }
  return f;
}

Forest baseline_dfs_forest(const Graph& g) {
  Forest f;
  f.parent.assign(g.num_vertices(), kNoVertex);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root : active_vertices(g)) {
    if (seen[root]) continue;
    f.roots.push_back(root);
    seen[root] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      auto nb = g.neighbors(v);
      if (i == nb.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex u = nb[i++];
      if (seen[u]) continue;
      seen[u] = 1;
      f.parent[u] = v;
      stack.push_back({u, 0});
    }
  }
  return f;
}

Eccentricities baseline_eccentricity_sweep(const Graph& g) {
  const auto active = active_vertices(g);
  if (active.empty()) throw std::domain_error("eccentricities need at least one edge");
  Eccentricities out;
  out.eccentricity.assign(g.num_vertices(), kInfinity);
  out.radius = kInfinity;
  for (Vertex s : active) {
    const BfsResult r = baseline_bfs(g, s);
    if (r.order.size() != active.size()) {
      for (Vertex u : active) {
        if (r.dist[u] == kInfinity) throw DisconnectedGraphError(s, u);
      }
    }
    const std::uint32_t ecc = r.dist[r.order.back()];
    out.eccentricity[s] = ecc;
    out.diameter = std::max(out.diameter, ecc);
    out.radius = std::min(out.radius, ecc);
  }
  for (Vertex v : active) {
    if (out.eccentricity[v] == out.radius) out.center.push_back(v);
  }
  return out;
}

Components baseline_components(const Graph& g) {
  Components out;
  out.label.assign(g.num_vertices(), kNoComponent);
  std::vector<Vertex> stack;
  for (Vertex root : active_vertices(g)) {
    if (out.label[root] != kNoComponent) continue;
    const auto id = static_cast<std::uint32_t>(out.count++);
    out.label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (out.label[u] != kNoComponent) continue;
        out.label[u] = id;
        out.forest.push_back(normalized({u, v}));
        stack.push_back(u);
      }
    }
  }
  return out;
}

Matching baseline_matching(const Graph& g) {
  Matching out;
  std::vector<char> matched(g.num_vertices(), 0);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (matched[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v > u && !matched[v]) {
        matched[u] = matched[v] = 1;
        out.edges.push_back({u, v});
        break;
      }
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (matched[v]) out.vertex_cover.push_back(v);
  }
  return out;
}

std::vector<Vertex> baseline_mis(const Graph& g) {
  std::vector<char> blocked(g.num_vertices(), 0);
  std::vector<Vertex> out;
  for (Vertex v : active_vertices(g)) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  return out;
}

std::vector<std::uint32_t> baseline_coloring(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::uint32_t> col(g.num_vertices(), 0);
  std::vector<std::size_t> taken(order.size() + 2, 0);
  std::size_t t = 0;
  for (Vertex v : order) {
    g.check_vertex(v);
    if (col[v] != 0) throw std::invalid_argument("vertex order repeats vertex " + std::to_string(v));
    ++t;
    for (Vertex u : g.neighbors(v)) {
      if (col[u] > 0) taken[col[u]] = t;
    }
    std::uint32_t p = 1;
    while (taken[p] == t) ++p;
    col[v] = p;
  }
  return col;
}

CorenessResult baseline_kcore(const Graph& g) {
  const std::size_t n = g.num_vertices();
  CorenessResult out;
  out.core.assign(n, 0);
  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (Vertex v = 0; v < n; ++v) ++bin[deg[v] + 1];
  for (std::size_t d = 0; d <= max_deg; ++d) bin[d + 1] += bin[d];
  std::vector<Vertex> vert(n);
  std::vector<std::size_t> pos(n);
  {
    std::vector<std::size_t> fill(bin.begin(), bin.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      pos[v] = fill[deg[v]]++;
      vert[pos[v]] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = vert[i];
    out.core[v] = deg[v];
    out.degeneracy = std::max(out.degeneracy, deg[v]);
    if (g.degree(v) > 0) out.peel_order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;
      const std::uint32_t du = deg[u];
      const std::size_t pw = bin[du];
      const Vertex w = vert[pw];
      std::swap(vert[pos[u]], vert[pw]);
      std::swap(pos[u], pos[w]);
      ++bin[du];
      --deg[u];
    }
  }
  return out;
}

DensestSubgraph baseline_densest_subgraph(const Graph& g) {
  const auto active = active_vertices(g);
  if (active.empty()) throw std::domain_error("densest subgraph of an empty graph");
  const CorenessResult cores = baseline_kcore(g);
  DensestSubgraph out;
  std::vector<char> in_s(g.num_vertices(), 0);
  for (Vertex v : active) {
    if (cores.core[v] == cores.degeneracy) {
      out.vertices.push_back(v);
      in_s[v] = 1;
    }
  }
  for (Vertex v : out.vertices) {
    for (Vertex u : g.neighbors(v)) {
      if (u > v && in_s[u]) ++out.edges;
    }
  }
  out.density = static_cast<double>(out.edges) / static_cast<double>(out.vertices.size());
  return out;
}

std::vector<Vertex> baseline_maximal_clique(const Graph& g) {
  const auto active = active_vertices(g);
  if (active.empty()) throw std::domain_error("maximal clique of an empty graph");
  std::vector<Vertex> s{active.front()};
  auto nb = g.neighbors(active.front());
  std::vector<Vertex> cand(nb.begin(), nb.end());
  while (!cand.empty()) {
    const Vertex v = cand.front();
    s.push_back(v);
    std::erase_if(cand, [&](Vertex u) { return u == v || !g.has_edge(u, v); });
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace dcc
