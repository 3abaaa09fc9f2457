#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dcc/cover.hpp"
#include "dcc/graph.hpp"

namespace dcc {

inline constexpr std::uint32_t kNoColor = std::numeric_limits<std::uint32_t>::max();

// Color classes of a first-fit coloring of the complement graph. Each class
// is a clique of G, stored ascending; classes appear in greedy order.
struct ColorClasses {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::uint32_t> color;  // class index per vertex, kNoColor if not in the order
};

// First-fit coloring of the complement, visiting vertices in `order`, without
// building the complement. `order` lists distinct vertices; vertices outside
// it stay uncolored. Throws std::invalid_argument on repeats or bad ids.
ColorClasses ff_complement_color_classes(const Graph& g, std::span<const Vertex> order);

// Complement color classes F plus, for each v in F_k and each earlier class
// F_l meeting N(v), the clique (F_l & N(v)) + v. An empty order means
// ascending ids.
DccRepresentation lovasz_peeling(const Graph& g, std::span<const Vertex> order = {});

// Composition-minimal cover with at most 2*sigma cliques. The order drives
// the complement coloring and the per-vertex phase; empty means ascending.
DccRepresentation succinct_peeling(const Graph& g, std::span<const Vertex> order = {});

struct GlobalAdmissibilityOptions {
  // Each edge exactly once; empty means lexicographic order.
  std::vector<Edge> edge_order;
  // Recheck the admissibility sets against the graph after every edge and
  // throw std::logic_error on a mismatch. Quadratic; meant for small graphs.
  bool check_invariants = false;
};

DccRepresentation global_admissibility(const Graph& g, const GlobalAdmissibilityOptions& options = {});

// Processes vertices in peel order, coloring the uncovered earlier
// neighborhood of each and then growing those cliques within S_i.
DccRepresentation local_admissibility(const Graph& g);

// local_admissibility without the growing step.
DccRepresentation local_peeling(const Graph& g);

enum class Constructor { kLovaszPeeling, kSuccinctPeeling, kGlobalAdmissibility, kLocalAdmissibility, kLocalPeeling };

inline constexpr Constructor kAllConstructors[] = {
    Constructor::kLovaszPeeling, Constructor::kSuccinctPeeling, Constructor::kGlobalAdmissibility,
    Constructor::kLocalAdmissibility, Constructor::kLocalPeeling};

// Short names: lp, sp, ga, la, pl.
std::string_view constructor_name(Constructor c);
std::optional<Constructor> parse_constructor(std::string_view name);

DccRepresentation construct(const Graph& g, Constructor c);

}  // namespace dcc
