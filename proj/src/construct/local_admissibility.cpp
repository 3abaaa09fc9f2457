#include <algorithm>

#include "coverage.hpp"
#include "dcc/constructors.hpp"
#include "dcc/degeneracy.hpp"

namespace dcc {
namespace {

bool closed_adjacent(const Graph& g, Vertex x, Vertex y) { return x == y || g.has_edge(x, y); }

// Grows cliques[first..] with uncovered edges of G[s] using admissibility
// sets local to s. pos maps each vertex of s to its index in s.
void augment_ls(const Graph& g, std::vector<std::vector<Vertex>>& cliques, std::size_t first,
                const std::vector<Vertex>& s, const std::vector<std::uint32_t>& pos,
                detail::UncoveredEdges& m) {
  const std::size_t r = cliques.size() - first;
  std::vector<char> adm(s.size() * r, 0);
  std::vector<std::vector<Vertex>> d(r);
  for (std::size_t j = 0; j < r; ++j) {
    const auto& c = cliques[first + j];
    for (Vertex u : s) {
      bool ok = true;
      for (Vertex x : c) {
        if (!closed_adjacent(g, u, x)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d[j].push_back(u);
        adm[pos[u] * r + j] = 1;
      }
    }
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const Vertex u = s[a], w = s[b];
      if (!m.uncovered(u, w)) continue;
      std::size_t j = 0;
      while (j < r && !(adm[a * r + j] && adm[b * r + j])) ++j;
      if (j == r) continue;
      auto& c = cliques[first + j];
      for (Vertex x : {u, w}) {
        if (std::find(c.begin(), c.end(), x) == c.end()) c.push_back(x);
      }
      std::erase_if(d[j], [&](Vertex t) {
        const bool keep = closed_adjacent(g, t, u) && closed_adjacent(g, t, w);
        if (!keep) adm[pos[t] * r + j] = 0;
        return !keep;
      });
      const Vertex pair[2] = {u, w};
      m.cover_between(pair, c);
    }
  }
}

DccRepresentation local_construction(const Graph& g, bool augment) {
  const std::size_t n = g.num_vertices();
  detail::UncoveredEdges m(g);
  const DegeneracyOrdering pi = degeneracy_ordering(g);
  const Ragged<Vertex> back = backward_neighborhoods(g, pi);
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> mv, s;
  std::vector<std::vector<Vertex>> q;
  std::vector<std::uint32_t> pos(n, 0);

  for (std::size_t i = n; i-- > 1;) {
    const Vertex vi = pi.order[i];
    // Later neighbors were handled already, so these are earlier ones.
    m.uncovered_neighbors(vi, mv);
    if (mv.empty()) continue;

    if (augment) {
      auto earlier = back[vi];
      s.assign(1, vi);
      for (Vertex u : earlier) {
        bool open = m.uncovered(u, vi);
        for (std::size_t k = 0; k < earlier.size() && !open; ++k) open = m.uncovered(u, earlier[k]);
        if (open) s.push_back(u);
      }
      std::sort(s.begin(), s.end());
      for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]] = static_cast<std::uint32_t>(k);
    }

    // First-fit coloring of the complement of G[M_vi], ascending ids.
    q.clear();
    for (Vertex x : mv) {
      std::size_t j = 0;
      for (; j < q.size(); ++j) {
        if (std::all_of(q[j].begin(), q[j].end(), [&](Vertex y) { return g.has_edge(x, y); })) break;
      }
      if (j == q.size()) q.emplace_back();
      q[j].push_back(x);
    }

    const std::size_t first = cliques.size();
    for (auto& cls : q) {
      cls.push_back(vi);
      m.cover_clique(cls);
      cliques.push_back(std::move(cls));
    }
    if (augment) augment_ls(g, cliques, first, s, pos, m);
  }
  return detail::finish(n, cliques);
}

}  // namespace

DccRepresentation local_admissibility(const Graph& g) { return local_construction(g, true); }

DccRepresentation local_peeling(const Graph& g) { return local_construction(g, false); }

}  // namespace dcc
