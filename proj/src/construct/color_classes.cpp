#include <algorithm>
#include <stdexcept>
#include <string>

#include "dcc/constructors.hpp"

namespace dcc {

ColorClasses ff_complement_color_classes(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  ColorClasses out;
  out.color.assign(n, kNoColor);
  // Per class: total size, remaining count and the step that last reset it.
  // A class is open to v when every member is a G-neighbor of v, i.e. its
  // remaining count reaches zero while scanning N(v).
  std::vector<std::uint32_t> tsize, rsize, stamp;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const Vertex v = order[step];
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    if (out.color[v] != kNoColor) throw std::invalid_argument("vertex order repeats a vertex");
    const auto t = static_cast<std::uint32_t>(step + 1);
    auto p = static_cast<std::uint32_t>(tsize.size());
    for (Vertex u : g.neighbors(v)) {
      const std::uint32_t c = out.color[u];
      if (c == kNoColor) continue;
      if (stamp[c] != t) {
        stamp[c] = t;
        rsize[c] = tsize[c];
      }
      if (--rsize[c] == 0) p = std::min(p, c);
    }
    if (p == tsize.size()) {
      tsize.push_back(0);
      rsize.push_back(0);
      stamp.push_back(0);
      out.classes.emplace_back();
    }
    ++tsize[p];
    out.color[v] = p;
    out.classes[p].push_back(v);
  }
  for (auto& c : out.classes) std::sort(c.begin(), c.end());
  return out;
}

}  // namespace dcc
