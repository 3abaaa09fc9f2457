#include <stdexcept>
#include <string>

#include "dcc/algorithms.hpp"

namespace dcc {
namespace {

void check_order(const DccRepresentation& dcc, std::span<const Vertex> order, std::vector<std::uint32_t>& col) {
  col.assign(dcc.num_vertices(), 0);
  std::vector<char> seen(dcc.num_vertices(), 0);
  for (Vertex v : order) {
    if (v >= dcc.num_vertices()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("vertex order repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

std::vector<std::uint32_t> first_fit_coloring(const DccRepresentation& dcc, std::span<const Vertex> order) {
  std::vector<std::uint32_t> col;
  check_order(dcc, order, col);
  // flag[c] == t marks color c as taken by a neighbor of the t-th vertex.
  std::vector<std::uint32_t> flag(order.size() + 2, 0);
  std::uint32_t used = 0;
  std::uint32_t t = 0;
  for (Vertex v : order) {
    ++t;
    for (Label l : dcc.dual.labels(v)) {
      for (Vertex u : dcc.cover.clique(l)) {
        if (col[u] > 0) flag[col[u]] = t;
      }
    }
    std::uint32_t p = 1;
    while (p <= used && flag[p] == t) ++p;
    if (p > used) used = p;
    col[v] = p;
  }
  return col;
}

std::vector<std::uint32_t> ff_complement_coloring_dcc(const DccRepresentation& dcc, std::span<const Vertex> order) {
  std::vector<std::uint32_t> col;
  check_order(dcc, order, col);
  const std::size_t slots = order.size() + 2;
  std::vector<std::uint32_t> flag(slots, 0), tsize(slots, 0), rsize(slots, 0);
  std::vector<std::uint32_t> seen(dcc.num_vertices(), 0);
  std::uint32_t used = 0;
  std::uint32_t t = 0;
  for (Vertex v : order) {
    ++t;
    std::uint32_t p = used + 1;
    // A color is open to v when all of its vertices are neighbors of v.
    for (Label l : dcc.dual.labels(v)) {
      for (Vertex u : dcc.cover.clique(l)) {
        const std::uint32_t c = col[u];
        if (c == 0 || seen[u] == t) continue;
        seen[u] = t;
        if (flag[c] < t) rsize[c] = tsize[c];
        --rsize[c];
        flag[c] = t;
        if (rsize[c] == 0 && c < p) p = c;
      }
    }
    if (p == used + 1) ++used;
    col[v] = p;
    ++tsize[p];
  }
  return col;
}

}  // namespace dcc
