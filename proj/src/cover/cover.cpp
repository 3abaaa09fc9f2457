#include "dcc/cover.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dcc {

CliqueCover::CliqueCover(std::size_t n, const std::vector<std::vector<Vertex>>& cliques) : n_(n) {
  for (const auto& c : cliques) add_clique(c);
}

void CliqueCover::add_clique(std::span<const Vertex> members) {
  if (members.empty()) throw std::invalid_argument("empty clique");
  std::vector<Vertex> c(members.begin(), members.end());
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
    throw std::invalid_argument("clique " + std::to_string(num_cliques()) + " repeats a vertex");
  }
  if (c.back() >= n_) {
    throw std::invalid_argument("clique " + std::to_string(num_cliques()) + ": vertex " +
                                std::to_string(c.back()) + " out of range for n=" + std::to_string(n_));
  }
  cliques_.push_row(c);
}

std::size_t CliqueCover::max_clique_size() const {
  std::size_t best = 0;
  for (std::size_t l = 0; l < num_cliques(); ++l) best = std::max(best, cliques_.row_size(l));
  return best;
}

IncidenceDual::IncidenceDual(Ragged<Label> labels, std::size_t num_labels)
    : labels_(std::move(labels)), num_labels_(num_labels) {
  for (std::size_t v = 0; v < labels_.rows(); ++v) {
    auto row = labels_[v];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= num_labels_ || (i > 0 && row[i - 1] >= row[i])) {
        throw std::invalid_argument("label list of vertex " + std::to_string(v) +
                                    " is not ascending within 0.." + std::to_string(num_labels_));
      }
    }
  }
}

IncidenceDual dual_from_cover(const CliqueCover& cover) {
  const std::size_t n = cover.num_vertices();
  std::vector<std::size_t> count(n + 1, 0);
  const auto& rows = cover.cliques();
  for (Vertex v : rows.values()) {
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    ++count[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) count[i + 1] += count[i];
  std::vector<Label> flat(rows.total());
  std::vector<std::size_t> fill(count.begin(), count.end() - 1);
  // Scanning labels ascending keeps each L_v ascending.
  for (Label l = 0; l < cover.num_cliques(); ++l) {
    for (Vertex v : cover.clique(l)) flat[fill[v]++] = l;
  }
  Ragged<Label> labels;
  for (Vertex v = 0; v < n; ++v) {
    labels.push_row(std::span<const Label>(flat.data() + count[v], count[v + 1] - count[v]));
  }
  return IncidenceDual(std::move(labels), cover.num_cliques());
}

CliqueCover cover_from_dual(const IncidenceDual& dual) {
  std::vector<std::vector<Vertex>> cliques(dual.num_labels());
  for (Vertex v = 0; v < dual.num_vertices(); ++v) {
    for (Label l : dual.labels(v)) cliques[l].push_back(v);
  }
  return CliqueCover(dual.num_vertices(), cliques);
}

DccRepresentation DccRepresentation::from_cover(CliqueCover cover) {
  DccRepresentation d;
  d.dual = dual_from_cover(cover);
  d.cover = std::move(cover);
  return d;
}

bool is_consistent(const DccRepresentation& dcc) {
  if (dcc.dual.num_vertices() != dcc.cover.num_vertices()) return false;
  if (dcc.dual.num_labels() != dcc.cover.num_cliques()) return false;
  if (dcc.dual.size() != dcc.cover.size()) return false;
  for (Label l = 0; l < dcc.cover.num_cliques(); ++l) {
    for (Vertex v : dcc.cover.clique(l)) {
      auto lv = dcc.dual.labels(v);
      if (!std::binary_search(lv.begin(), lv.end(), l)) return false;
    }
  }
  return true;
}

std::vector<Vertex> cover_universe(const CliqueCover& cover) {
  std::vector<char> seen(cover.num_vertices(), 0);
  for (Vertex v : cover.cliques().values()) seen[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < seen.size(); ++v) {
    if (seen[v]) out.push_back(v);
  }
  return out;
}

Label first_common_label(std::span<const Label> a, std::span<const Label> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.empty()) return kNoLabel;
  // Probe the short list into the long one when the lengths are lopsided.
  if (a.size() * 8 < b.size()) {
    for (Label l : a) {
      if (std::binary_search(b.begin(), b.end(), l)) return l;
    }
    return kNoLabel;
  }
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return a[i];
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return kNoLabel;
}

bool adjacency_query(const IncidenceDual& dual, Vertex u, Vertex v) {
  const std::size_t n = dual.num_vertices();
  if (u >= n || v >= n) {
    throw std::out_of_range("vertex " + std::to_string(std::max(u, v)) + " out of range for n=" +
                            std::to_string(n));
  }
  if (u == v) throw std::invalid_argument("adjacency query needs two distinct vertices");
  return first_common_label(dual.labels(u), dual.labels(v)) != kNoLabel;
}

std::vector<Vertex> neighborhood_query(const DccRepresentation& dcc, Vertex v) {
  if (v >= dcc.num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Vertex> out;
  for (Label l : dcc.dual.labels(v)) {
    for (Vertex u : dcc.cover.clique(l)) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dcc
