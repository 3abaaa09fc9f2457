#pragma once

#include <span>
#include <vector>

#include "dcc/algorithms.hpp"
#include "dcc/union_find.hpp"

namespace dcc::detail {

// Clique-only algorithms written against a clique source:
// for_each(visit) calls visit(std::span<const Vertex>) once per clique in
// label order. Shared by plain and encoded covers.

template <class ForEachClique>
Components components_over(std::size_t n, ForEachClique&& for_each) {
  UnionFind uf(n);
  Components out;
  std::vector<char> in_v(n, 0);
  for_each([&](std::span<const Vertex> c) {
    if (c.empty()) return;
    in_v[c[0]] = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      in_v[c[i]] = 1;
      if (uf.unite(c[i], c[0])) out.forest.push_back(normalized({c[i], c[0]}));
    }
  });
  out.label.assign(n, kNoComponent);
  std::vector<std::uint32_t> root_label(n, kNoComponent);
  for (Vertex v = 0; v < n; ++v) {
    if (!in_v[v]) continue;
    const Vertex r = uf.find(v);
    if (root_label[r] == kNoComponent) root_label[r] = static_cast<std::uint32_t>(out.count++);
    out.label[v] = root_label[r];
  }
  return out;
}

template <class ForEachClique>
Matching matching_over(std::size_t n, ForEachClique&& for_each) {
  std::vector<char> matched(n, 0);
  Matching out;
  std::vector<Vertex> free;
  for_each([&](std::span<const Vertex> c) {
    free.clear();
    for (Vertex v : c) {
      if (!matched[v]) free.push_back(v);
    }
    for (std::size_t i = 0; i + 1 < free.size(); i += 2) {
      out.edges.push_back({free[i], free[i + 1]});
      matched[free[i]] = matched[free[i + 1]] = 1;
    }
  });
  for (Vertex v = 0; v < n; ++v) {
    if (matched[v]) out.vertex_cover.push_back(v);
  }
  return out;
}

}  // namespace dcc::detail
