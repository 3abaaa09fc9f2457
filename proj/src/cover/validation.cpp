#include "dcc/validation.hpp"

#include <sstream>
#include <stdexcept>

namespace dcc {

std::string ValidationReport::describe(std::size_t max_items) const {
  if (valid()) return "valid";
  std::ostringstream out;
  if (!non_cliques.empty()) {
    out << non_cliques.size() << " non-clique set(s):";
    for (std::size_t i = 0; i < non_cliques.size() && i < max_items; ++i) {
      const auto& w = non_cliques[i];
      out << (i == 0 ? " " : "; ") << "clique " << w.clique + 1 << " lacks edge {" << w.non_edge.u + 1 << ','
          << w.non_edge.v + 1 << '}';
    }
  }
  if (!uncovered.empty()) {
    if (!non_cliques.empty()) out << ". ";
    out << uncovered.size() << " uncovered edge(s):";
    for (std::size_t i = 0; i < uncovered.size() && i < max_items; ++i) {
      out << " {" << uncovered[i].u + 1 << ',' << uncovered[i].v + 1 << '}';
    }
  }
  return out.str();
}

std::vector<std::uint32_t> edge_coverage_counts(const Graph& g, const CliqueCover& cover) {
  std::vector<std::uint32_t> count(g.num_edges(), 0);
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (auto id = g.edge_id(c[i], c[j])) ++count[*id];
      }
    }
  }
  return count;
}

ValidationReport validate_cover(const Graph& g, const CliqueCover& cover) {
  if (g.num_vertices() != cover.num_vertices()) {
    throw std::invalid_argument("cover has n=" + std::to_string(cover.num_vertices()) +
                                " but graph has n=" + std::to_string(g.num_vertices()));
  }
  ValidationReport report;
  std::vector<char> covered(g.num_edges(), 0);
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    auto c = cover.clique(l);
    bool reported = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (auto id = g.edge_id(c[i], c[j])) {
          covered[*id] = 1;
        } else if (!reported) {
          report.non_cliques.push_back({l, {c[i], c[j]}});
          reported = true;
        }
      }
    }
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    auto nb = g.neighbors(u);
    auto ids = g.neighbor_edge_ids(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (u < nb[i] && !covered[ids[i]]) report.uncovered.push_back({u, nb[i]});
    }
  }
  return report;
}

}  // namespace dcc
