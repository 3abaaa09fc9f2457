#include <algorithm>
#include <stdexcept>
#include <string>

#include "coverage.hpp"
#include "dcc/constructors.hpp"

namespace dcc {
namespace {

// Cliques C, their labels L, admissible labels A and admissible vertices D.
// Label l is admissible for w exactly when C_l is inside N[w].
struct AdmissibilityState {
  std::vector<std::vector<Vertex>> c;
  std::vector<std::vector<Vertex>> d;
  std::vector<std::vector<Label>> a;
  std::vector<std::vector<Label>> l;

  explicit AdmissibilityState(std::size_t n) : a(n), l(n) {}
};

bool closed_adjacent(const Graph& g, Vertex x, Vertex y) { return x == y || g.has_edge(x, y); }

void add_label(std::vector<Label>& list, Label lab) {
  auto it = std::lower_bound(list.begin(), list.end(), lab);
  if (it == list.end() || *it != lab) list.insert(it, lab);
}

void remove_label(std::vector<Label>& list, Label lab) {
  auto it = std::lower_bound(list.begin(), list.end(), lab);
  if (it != list.end() && *it == lab) list.erase(it);
}

void check_state(const Graph& g, const AdmissibilityState& s, Edge after) {
  auto fail = [&](const std::string& what) {
    throw std::logic_error("admissibility invariant broken after edge {" + std::to_string(after.u) + "," +
                           std::to_string(after.v) + "}: " + what);
  };
  for (Label lab = 0; lab < s.c.size(); ++lab) {
    std::vector<Vertex> d_sorted = s.d[lab];
    std::sort(d_sorted.begin(), d_sorted.end());
    for (Vertex w = 0; w < g.num_vertices(); ++w) {
      bool admissible = true;
      for (Vertex x : s.c[lab]) admissible = admissible && closed_adjacent(g, x, w);
      const bool in_a = std::binary_search(s.a[w].begin(), s.a[w].end(), lab);
      const bool in_d = std::binary_search(d_sorted.begin(), d_sorted.end(), w);
      const bool in_l = std::binary_search(s.l[w].begin(), s.l[w].end(), lab);
      const bool in_c = std::find(s.c[lab].begin(), s.c[lab].end(), w) != s.c[lab].end();
      if (in_a != admissible) fail("A of vertex " + std::to_string(w) + " disagrees with clique " + std::to_string(lab));
      if (in_a != in_d) fail("A and D disagree on vertex " + std::to_string(w));
      if (in_l != in_c) fail("L and C disagree on vertex " + std::to_string(w));
      if (in_l && !in_a) fail("L not inside A for vertex " + std::to_string(w));
    }
  }
}

std::vector<Edge> resolve_edge_order(const Graph& g, const std::vector<Edge>& order) {
  if (order.empty()) return g.edges();
  if (order.size() != g.num_edges()) throw std::invalid_argument("edge order must list every edge once");
  std::vector<char> seen(g.num_edges(), 0);
  for (Edge e : order) {
    auto id = g.edge_id(e.u, e.v);
    if (!id) throw std::invalid_argument("edge order contains a non-edge");
    if (seen[*id]) throw std::invalid_argument("edge order repeats an edge");
    seen[*id] = 1;
  }
  return order;
}

}  // namespace

DccRepresentation global_admissibility(const Graph& g, const GlobalAdmissibilityOptions& options) {
  const auto order = resolve_edge_order(g, options.edge_order);
  AdmissibilityState s(g.num_vertices());
  std::vector<Vertex> common;
  for (Edge e : order) {
    const Vertex u = e.u, v = e.v;
    if (first_common_label(s.l[u], s.l[v]) != kNoLabel) continue;
    const Label lab = first_common_label(s.a[u], s.a[v]);
    if (lab != kNoLabel) {
      for (Vertex x : {u, v}) {
        if (!std::binary_search(s.l[x].begin(), s.l[x].end(), lab)) {
          s.c[lab].push_back(x);
          add_label(s.l[x], lab);
        }
      }
      std::erase_if(s.d[lab], [&](Vertex w) {
        const bool keep = closed_adjacent(g, w, u) && closed_adjacent(g, w, v);
        if (!keep) remove_label(s.a[w], lab);
        return !keep;
      });
    } else {
      const auto fresh = static_cast<Label>(s.c.size());
      s.c.push_back({u, v});
      s.l[u].push_back(fresh);
      s.l[v].push_back(fresh);
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      common.clear();
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      common.push_back(u);
      common.push_back(v);
      // Fresh labels are the largest so far, so A stays sorted.
      for (Vertex w : common) s.a[w].push_back(fresh);
      s.d.push_back(std::move(common));
      common = {};
    }
    if (options.check_invariants) check_state(g, s, e);
  }
  return detail::finish(g.num_vertices(), s.c);
}

}  // namespace dcc
