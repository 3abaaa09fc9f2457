#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "dcc/types.hpp"

namespace dcc {

// Disjoint sets with union by rank and path compression.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }

  Vertex find(Vertex x) {
    Vertex root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const Vertex next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Returns false when a and b were already joined.
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace dcc
