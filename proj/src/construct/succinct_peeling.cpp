#include <algorithm>
#include <utility>

#include "coverage.hpp"
#include "dcc/constructors.hpp"
#include "dcc/degeneracy.hpp"

namespace dcc {
namespace {

// Grows a clique through pivot edge {u, v} using uncovered edges that lie
// inside the common closed neighborhood of the clique.
class Extender {
 public:
  Extender(const Graph& g, const Ragged<Vertex>& back, detail::UncoveredEdges& m)
      : g_(g), back_(back), m_(m), in_vk_(g.num_vertices(), 0), in_c_(g.num_vertices(), 0) {}

  void extend(std::vector<Vertex>& c, Vertex u, Vertex v) {
    ++stamp_;
    for (Vertex x : c) in_c_[x] = stamp_;

    // V_k: closed common neighbors of the pivot adjacent to all of C.
    closed_common(u, v, cand_);
    vk_.clear();
    for (Vertex w : cand_) {
      bool ok = true;
      for (Vertex x : c) {
        if (x != w && !g_.has_edge(x, w)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        vk_.push_back(w);
        in_vk_[w] = stamp_;
      }
    }

    ek_.clear();
    for (Vertex y : vk_) {
      for (Vertex x : back_[y]) {
        if (in_vk_[x] == stamp_ && m_.uncovered(x, y)) ek_.push_back({x, y});
      }
    }

    for (Edge e : ek_) {
      if (in_vk_[e.u] != stamp_ || in_vk_[e.v] != stamp_ || !m_.uncovered(e.u, e.v)) continue;
      for (Vertex z : {e.u, e.v}) {
        if (in_c_[z] != stamp_) {
          in_c_[z] = stamp_;
          c.push_back(z);
        }
      }
      const Vertex pair[2] = {e.u, e.v};
      m_.cover_between(pair, c);
      std::erase_if(vk_, [&](Vertex w) {
        const bool keep = (w == e.u || g_.has_edge(w, e.u)) && (w == e.v || g_.has_edge(w, e.v));
        if (!keep) in_vk_[w] = 0;
        return !keep;
      });
    }
    std::sort(c.begin(), c.end());
  }

 private:
  void closed_common(Vertex u, Vertex v, std::vector<Vertex>& out) const {
    out.clear();
    auto a = g_.neighbors(u);
    auto b = g_.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    // u and v are adjacent, so each lies in the other's neighborhood.
    out.push_back(u);
    out.push_back(v);
    std::sort(out.begin(), out.end());
  }

  const Graph& g_;
  const Ragged<Vertex>& back_;
  detail::UncoveredEdges& m_;
  std::vector<std::uint32_t> in_vk_, in_c_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> cand_, vk_;
  std::vector<Edge> ek_;
};

}  // namespace

DccRepresentation succinct_peeling(const Graph& g, std::span<const Vertex> order) {
  const auto ord = detail::resolve_order(g, order);
  detail::UncoveredEdges m(g);
  const ColorClasses f = ff_complement_color_classes(g, ord);
  const DegeneracyOrdering pi = degeneracy_ordering(g);
  const Ragged<Vertex> back = backward_neighborhoods(g, pi);
  Extender extender(g, back, m);

  std::vector<std::vector<Vertex>> cliques;
  for (const auto& c : f.classes) {
    if (c.size() >= 2) cliques.push_back(c);
  }
  for (const auto& c : cliques) m.cover_clique(c);
  for (auto& c : cliques) extender.extend(c, c[0], c[1]);

  std::vector<std::pair<std::uint32_t, Vertex>> earlier;
  for (Vertex v : ord) {
    const std::uint32_t k = f.color[v];
    earlier.clear();
    for (Vertex u : g.neighbors(v)) {
      if (f.color[u] < k) earlier.emplace_back(f.color[u], u);
    }
    std::sort(earlier.begin(), earlier.end());
    for (std::size_t i = 0; i < earlier.size();) {
      std::vector<Vertex> c;
      std::size_t j = i;
      for (; j < earlier.size() && earlier[j].first == earlier[i].first; ++j) {
        if (m.uncovered(v, earlier[j].second)) c.push_back(earlier[j].second);
      }
      i = j;
      if (c.empty()) continue;
      const Vertex pivot = c.front();
      c.push_back(v);
      m.cover_clique(c);
      extender.extend(c, pivot, v);
      cliques.push_back(std::move(c));
    }
  }
  return detail::finish(g.num_vertices(), cliques);
}

}  // namespace dcc
