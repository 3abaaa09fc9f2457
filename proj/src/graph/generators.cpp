#include "dcc/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcc/rng.hpp"

namespace dcc {
namespace {

void add_clique(std::vector<Edge>& edges, Vertex first, std::size_t count) {
  for (Vertex i = 0; i < count; ++i) {
    for (Vertex j = i + 1; j < count; ++j) edges.push_back({first + i, first + j});
  }
}

void add_biclique(std::vector<Edge>& edges, Vertex a, std::size_t na, Vertex b, std::size_t nb) {
  for (Vertex i = 0; i < na; ++i) {
    for (Vertex j = 0; j < nb; ++j) edges.push_back({a + i, b + j});
  }
}

void check_size(std::size_t n, std::size_t factor) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > (std::size_t{1} << 31) / factor) throw std::invalid_argument("n too large");
}

enum class Attachment { kDegree, kUniform };

Graph grow(std::size_t n, std::size_t k, std::uint64_t seed, Attachment mode) {
  if (k == 0 || k >= n) {
    throw std::invalid_argument("attachment count k must satisfy 1 <= k < n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  }
  check_size(n, 1);
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  // Each endpoint occurrence appears once, so a uniform draw from this list
  // is a degree-proportional draw.
  std::vector<Vertex> endpoints;
  for (Edge e : edges) {
    endpoints.push_back(e.u);
    endpoints.push_back(e.v);
  }
  std::vector<std::uint64_t> picked_at(n, 0);
  std::vector<Vertex> targets;
  for (Vertex t = static_cast<Vertex>(k); t < n; ++t) {
    targets.clear();
    // Rejecting repeats gives sequential sampling without replacement.
    while (targets.size() < k) {
      Vertex c;
      if (mode == Attachment::kDegree && !endpoints.empty()) {
        c = endpoints[rng.below(endpoints.size())];
      } else {
        c = static_cast<Vertex>(rng.below(t));
      }
      if (picked_at[c] == t + 1ULL) continue;
      picked_at[c] = t + 1ULL;
      targets.push_back(c);
    }
    for (Vertex c : targets) {
      edges.push_back({c, t});
      if (mode == Attachment::kDegree) {
        endpoints.push_back(c);
        endpoints.push_back(t);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph gen_complete(std::size_t n) {
  check_size(n, 1);
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  return Graph::from_edges(n, edges);
}

Graph gen_matched_cliques(std::size_t n) {
  check_size(n, 2);
  const Vertex b = static_cast<Vertex>(n);
  std::vector<Edge> edges;
  add_clique(edges, 0, n);
  add_clique(edges, b, n);
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, b + i});
  return Graph::from_edges(2 * n, edges);
}

Graph gen_clique_minus_matching(std::size_t k) {
  if (k < 2 || (k & (k - 1)) != 0) {
    throw std::invalid_argument("k must be a power of two >= 2 (k=" + std::to_string(k) + ")");
  }
  check_size(k, 2);
  const Vertex kk = static_cast<Vertex>(k);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 2 * kk; ++i) {
    for (Vertex j = i + 1; j < 2 * kk; ++j) {
      if (j != i + kk) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(2 * k, edges);
}

Graph gen_abu_family(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  check_size(n, 3);
  const Vertex a = 0, b = static_cast<Vertex>(n), u = static_cast<Vertex>(2 * n);
  std::vector<Edge> edges;
  add_clique(edges, a, n);
  add_clique(edges, b, n);
  add_clique(edges, u, n);
  add_biclique(edges, u, n, a, 2 * n);
  return Graph::from_edges(3 * n, edges);
}

Graph gen_separation_family(std::size_t n) {
  check_size(n, 5);
  const Vertex nn = static_cast<Vertex>(n);
  const Vertex a = 0, b = nn, u = 2 * nn, v = 3 * nn, w = 4 * nn;
  std::vector<Edge> edges;
  for (Vertex block = 0; block < 5; ++block) add_clique(edges, block * nn, n);
  for (Vertex i = 0; i < nn; ++i) edges.push_back({a + i, b + i});
  add_biclique(edges, u, n, a, 2 * n);
  add_biclique(edges, v, n, a, n);
  add_biclique(edges, w, n, b, n);
  return Graph::from_edges(5 * n, edges);
}

Graph gen_minimality_example() {
  enum : Vertex { a, b, c, d, e, f, g, h };
  const std::vector<Edge> edges = {{a, b}, {a, c}, {b, c}, {b, d}, {c, d}, {f, a}, {f, c},
                                   {e, a}, {e, b}, {g, d}, {g, b}, {h, d}, {h, c}};
  return Graph::from_edges(8, edges);
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  check_size(n, 1);
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  if (p == 0.0) return Graph::from_edges(n, edges);
  if (p == 1.0) return gen_complete(n);
  if (n <= 10000) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.uniform01() < p) edges.push_back({u, v});
      }
    }
  } else {
    // Skip lengths over the pairs (w, v), w < v, in row order.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = rng.uniform01();
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_ba(std::size_t n, std::size_t k, std::uint64_t seed) {
  return grow(n, k, seed, Attachment::kDegree);
}

Graph gen_ua(std::size_t n, std::size_t k, std::uint64_t seed) {
  return grow(n, k, seed, Attachment::kUniform);
}

}  // namespace dcc
