#include "clique_scan.hpp"

namespace dcc {
namespace {

auto cliques_of(const CliqueCover& cover) {
  return [&cover](auto&& visit) {
    for (Label l = 0; l < cover.num_cliques(); ++l) visit(cover.clique(l));
  };
}

}  // namespace

Components connected_components(const CliqueCover& cover) {
  return detail::components_over(cover.num_vertices(), cliques_of(cover));
}

Matching maximal_matching(const CliqueCover& cover) {
  return detail::matching_over(cover.num_vertices(), cliques_of(cover));
}

std::vector<Vertex> maximal_independent_set(const DccRepresentation& dcc) {
  std::vector<char> blocked(dcc.num_vertices(), 0);
  std::vector<Vertex> out;
  for (Vertex v : cover_universe(dcc.cover)) {
    if (blocked[v]) continue;
    out.push_back(v);
    for (Label l : dcc.dual.labels(v)) {
      for (Vertex u : dcc.cover.clique(l)) blocked[u] = 1;
    }
  }
  return out;
}

}  // namespace dcc
