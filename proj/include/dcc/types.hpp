#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace dcc {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Label kNoLabel = std::numeric_limits<Label>::max();

// Undirected edge. Normalized edges keep u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

}  // namespace dcc
