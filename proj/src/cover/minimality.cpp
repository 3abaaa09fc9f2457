#include "dcc/minimality.hpp"

#include <algorithm>
#include <stdexcept>

#include "dcc/validation.hpp"

namespace dcc {
namespace {

void require_valid(const Graph& g, const CliqueCover& cover) {
  auto report = validate_cover(g, cover);
  if (!report.valid()) throw std::invalid_argument("invalid clique cover: " + report.describe());
}

MinimalityCheck failure(Label clique, Label other = kNoLabel, Vertex vertex = kNoVertex) {
  return {false, clique, other, vertex};
}

// True when v could leave clique c with every edge it covers there still
// covered by another clique.
bool removable(const Graph& g, std::span<const Vertex> c, Vertex v, const std::vector<std::uint32_t>& count) {
  for (Vertex w : c) {
    if (w != v && count[*g.edge_id(v, w)] < 2) return false;
  }
  return true;
}

}  // namespace

MinimalityCheck is_inclusion_minimal(const Graph& g, const CliqueCover& cover) {
  require_valid(g, cover);
  const IncidenceDual dual = dual_from_cover(cover);
  for (Label i = 0; i < cover.num_cliques(); ++i) {
    auto ci = cover.clique(i);
    // Any superset of C_i contains its first vertex.
    for (Label j : dual.labels(ci.front())) {
      if (j == i) continue;
      auto cj = cover.clique(j);
      if (cj.size() >= ci.size() && std::includes(cj.begin(), cj.end(), ci.begin(), ci.end())) {
        return failure(i, j);
      }
    }
  }
  return {};
}

MinimalityCheck is_support_minimal(const Graph& g, const CliqueCover& cover) {
  require_valid(g, cover);
  const auto count = edge_coverage_counts(g, cover);
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    bool has_private_edge = false;
    for (std::size_t i = 0; i < c.size() && !has_private_edge; ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (count[*g.edge_id(c[i], c[j])] == 1) {
          has_private_edge = true;
          break;
        }
      }
    }
    if (!has_private_edge) return failure(l);
  }
  return {};
}

MinimalityCheck is_composition_minimal(const Graph& g, const CliqueCover& cover) {
  require_valid(g, cover);
  const Label k = static_cast<Label>(cover.num_cliques());
  for (Label i = 0; i < k; ++i) {
    auto ci = cover.clique(i);
    for (Label j = i + 1; j < k; ++j) {
      auto cj = cover.clique(j);
      bool crossing_non_edge = false;
      for (Vertex a : ci) {
        for (Vertex b : cj) {
          if (a != b && !g.has_edge(a, b)) {
            crossing_non_edge = true;
            break;
          }
        }
        if (crossing_non_edge) break;
      }
      if (!crossing_non_edge) return failure(i, j);
    }
  }
  return {};
}

MinimalityCheck is_assignment_minimal(const Graph& g, const CliqueCover& cover) {
  require_valid(g, cover);
  const auto count = edge_coverage_counts(g, cover);
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    for (Vertex v : c) {
      if (removable(g, c, v, count)) return failure(l, kNoLabel, v);
    }
  }
  return {};
}

CliqueCover make_assignment_minimal(const Graph& g, const CliqueCover& cover) {
  require_valid(g, cover);
  auto count = edge_coverage_counts(g, cover);
  CliqueCover out(cover.num_vertices());
  std::vector<Vertex> current;
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    current.assign(c.begin(), c.end());
    // Counts only decrease, so a vertex kept once stays non-removable.
    for (Vertex v : c) {
      if (!removable(g, current, v, count)) continue;
      for (Vertex w : current) {
        if (w != v) --count[*g.edge_id(v, w)];
      }
      current.erase(std::find(current.begin(), current.end(), v));
    }
    if (current.size() >= 2) out.add_clique(current);
  }
  return out;
}

}  // namespace dcc
