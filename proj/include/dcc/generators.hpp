#pragma once

#include <cstdint>

#include "dcc/graph.hpp"

namespace dcc {

Graph gen_complete(std::size_t n);

// Cliques a = 0..n-1 and b = n..2n-1 joined by the matching {i, n+i}.
Graph gen_matched_cliques(std::size_t n);

// K_{2k} minus the matching {i, k+i}. k must be a power of two, k >= 2.
Graph gen_clique_minus_matching(std::size_t k);

// Cliques A = 0..n-1, B = n..2n-1, U = 2n..3n-1; U is complete to A and B.
Graph gen_abu_family(std::size_t n);

// 5n vertices: cliques A, B, U, V, W (blocks of n ids in that order).
// A-B matching {i, n+i}; U complete to A and B; V complete to A; W to B.
Graph gen_separation_family(std::size_t n);

// Eight vertices a..h as ids 0..7 with edges ab ac bc bd cd fa fc ea eb gd
// gb hd hc. The cover abc abe acf bdg cdh is support-minimal but not
// assignment-minimal.
Graph gen_minimality_example();

// G(n, p). Per-pair Bernoulli draws up to n = 10^4, geometric skipping above.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Growth from a k-clique; each new vertex attaches to k distinct earlier
// vertices, chosen proportional to degree (BA) or uniformly (UA).
Graph gen_ba(std::size_t n, std::size_t k, std::uint64_t seed);
Graph gen_ua(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace dcc
