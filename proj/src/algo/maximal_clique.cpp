#include <algorithm>
#include <stdexcept>

#include "dcc/algorithms.hpp"

namespace dcc {

std::vector<Vertex> maximal_clique(const DccRepresentation& dcc) {
  const CliqueCover& cover = dcc.cover;
  if (cover.num_cliques() == 0) throw std::domain_error("maximal clique needs a nonempty cover");
  Label seed = 0;
  for (Label l = 1; l < cover.num_cliques(); ++l) {
    if (cover.clique(l).size() > cover.clique(seed).size()) seed = l;
  }
  auto seed_clique = cover.clique(seed);
  std::vector<Vertex> s(seed_clique.begin(), seed_clique.end());
  std::vector<char> in_s(dcc.num_vertices(), 0);
  for (Vertex v : s) in_s[v] = 1;

  const Vertex x = s.front();
  std::vector<Vertex> a;
  for (Label l : dcc.dual.labels(x)) {
    for (Vertex u : cover.clique(l)) {
      if (!in_s[u]) a.push_back(u);
    }
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());

  auto keep_neighbors_of = [&](Vertex v) {
    std::erase_if(a, [&](Vertex u) { return first_common_label(dcc.dual.labels(u), dcc.dual.labels(v)) == kNoLabel; });
  };
  for (Vertex v : s) keep_neighbors_of(v);
  while (!a.empty()) {
    const Vertex v = a.front();
    a.erase(a.begin());
    s.push_back(v);
    keep_neighbors_of(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace dcc
