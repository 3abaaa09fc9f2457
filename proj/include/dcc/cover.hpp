#pragma once

#include <span>
#include <vector>

#include "dcc/graph.hpp"
#include "dcc/ragged.hpp"
#include "dcc/types.hpp"

namespace dcc {

// A family of cliques over vertices 0..n-1. Each clique is stored ascending
// without repeats. Singletons are representable; constructors never emit them.
class CliqueCover {
 public:
  CliqueCover() = default;
  explicit CliqueCover(std::size_t n) : n_(n) {}
  CliqueCover(std::size_t n, const std::vector<std::vector<Vertex>>& cliques);

  // Sorts a copy of members. Throws std::invalid_argument on an empty clique,
  // a repeated vertex or a vertex >= n.
  void add_clique(std::span<const Vertex> members);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_cliques() const { return cliques_.rows(); }
  // size(C): total number of vertex-clique assignments.
  std::size_t size() const { return cliques_.total(); }
  std::size_t max_clique_size() const;

  std::span<const Vertex> clique(Label l) const { return cliques_[l]; }
  const Ragged<Vertex>& cliques() const { return cliques_; }

  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;

 private:
  std::size_t n_ = 0;
  Ragged<Vertex> cliques_;
};

// Per-vertex ascending label lists L_v.
class IncidenceDual {
 public:
  IncidenceDual() = default;
  // Labels of each row must be ascending and below num_labels.
  IncidenceDual(Ragged<Label> labels, std::size_t num_labels);

  std::size_t num_vertices() const { return labels_.rows(); }
  std::size_t num_labels() const { return num_labels_; }
  std::size_t size() const { return labels_.total(); }
  std::span<const Label> labels(Vertex v) const { return labels_[v]; }

  friend bool operator==(const IncidenceDual&, const IncidenceDual&) = default;

 private:
  Ragged<Label> labels_;
  std::size_t num_labels_ = 0;
};

IncidenceDual dual_from_cover(const CliqueCover& cover);
CliqueCover cover_from_dual(const IncidenceDual& dual);

struct DccRepresentation {
  CliqueCover cover;
  IncidenceDual dual;

  static DccRepresentation from_cover(CliqueCover cover);
  std::size_t num_vertices() const { return cover.num_vertices(); }
  std::size_t size() const { return cover.size() + dual.size(); }
};

// True when l in L_v exactly when v in C_l.
bool is_consistent(const DccRepresentation& dcc);

// V = union of all cliques, ascending.
std::vector<Vertex> cover_universe(const CliqueCover& cover);

// {u, v} is an edge iff L_u and L_v intersect. Throws on u == v or an
// out-of-range vertex.
bool adjacency_query(const IncidenceDual& dual, Vertex u, Vertex v);

// N(v) as the deduplicated union of the cliques of v minus v, ascending.
std::vector<Vertex> neighborhood_query(const DccRepresentation& dcc, Vertex v);

// Smallest label in both sorted lists, or kNoLabel.
Label first_common_label(std::span<const Label> a, std::span<const Label> b);

}  // namespace dcc
