#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "dcc/baseline.hpp"
#include "dcc/bench.hpp"

namespace dcc {
namespace {

constexpr std::string_view kAppNames[] = {"cc",  "bfs",   "bfs-forest", "dfs", "matching",
                                          "mis", "color", "kcore",      "ecc", "maxclique"};

std::vector<Vertex> active_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) out.push_back(v);
  }
  return out;
}

Vertex pick_source(const AppOptions& options, const std::vector<Vertex>& scope, std::size_t n) {
  if (options.source != kNoVertex) {
    if (options.source >= n) throw std::out_of_range("source vertex out of range");
    return options.source;
  }
  if (scope.empty()) throw std::domain_error("bfs needs a source: the graph has no edges");
  return scope.front();
}

std::uint32_t count_distinct(const std::vector<std::uint32_t>& values, const std::vector<Vertex>& scope) {
  std::uint32_t best = 0;
  for (Vertex v : scope) {
    if (values[v] != kNoComponent) best = std::max(best, values[v] + 1);
  }
  return best;
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool check_parents(const Graph& g, const AppResult& r, std::string* why) {
  for (Vertex v = 0; v < r.parents.size(); ++v) {
    const Vertex p = r.parents[v];
    if (p != kNoVertex && !g.has_edge(v, p)) {
      return fail(why, "parent of vertex " + std::to_string(v + 1) + " is not a neighbor");
    }
  }
  return true;
}

bool check_matching(const Graph& g, const AppResult& r, std::string* why) {
  std::vector<char> used(g.num_vertices(), 0);
  for (Edge e : r.edges) {
    if (!g.has_edge(e.u, e.v)) return fail(why, "matching contains a non-edge");
    if (used[e.u] || used[e.v]) return fail(why, "matching edges share a vertex");
    used[e.u] = used[e.v] = 1;
  }
  for (Edge e : g.edges()) {
    if (!used[e.u] && !used[e.v]) return fail(why, "matching is not maximal");
  }
  return true;
}

bool check_independent(const Graph& g, const AppResult& r, std::string* why) {
  std::vector<char> in_s(g.num_vertices(), 0);
  for (Vertex v : r.vertices) in_s[v] = 1;
  for (Vertex v : r.vertices) {
    for (Vertex u : g.neighbors(v)) {
      if (in_s[u]) return fail(why, "independent set contains an edge");
    }
  }
  for (Vertex v : r.scope) {
    if (in_s[v]) continue;
    auto nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in_s[u]; })) {
      return fail(why, "independent set is not maximal");
    }
  }
  return true;
}

bool check_clique(const Graph& g, const AppResult& r, std::string* why) {
  const auto& s = r.vertices;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return fail(why, "clique contains a non-edge");
    }
  }
  std::vector<std::uint32_t> hits(g.num_vertices(), 0);
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) ++hits[u];
  }
  std::vector<char> in_s(g.num_vertices(), 0);
  for (Vertex v : s) in_s[v] = 1;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_s[v] && hits[v] == s.size()) return fail(why, "clique is not maximal");
  }
  return true;
}

bool check_one(const Graph& g, const AppResult& r, std::string* why) {
  switch (r.app) {
    case App::kBfs:
    case App::kBfsForest:
    case App::kDfs: return check_parents(g, r, why);
    case App::kMatching: return check_matching(g, r, why);
    case App::kMis: return check_independent(g, r, why);
    case App::kMaxClique: return check_clique(g, r, why);
    default: return true;
  }
}

}  // namespace

std::string_view app_name(App app) { return kAppNames[static_cast<std::size_t>(app)]; }

std::optional<App> parse_app(std::string_view name) {
  for (App a : kAllApps) {
    if (app_name(a) == name) return a;
  }
  return std::nullopt;
}

bool app_needs_dual(App app) { return app != App::kCc && app != App::kMatching; }

AppResult run_on_graph(App app, const Graph& g, const AppOptions& options) {
  AppResult r;
  r.app = app;
  r.n = g.num_vertices();
  r.scope = active_vertices(g);
  switch (app) {
    case App::kCc: r.values = baseline_components(g).label; break;
    case App::kBfs: {
      r.source = pick_source(options, r.scope, r.n);
      auto b = baseline_bfs(g, r.source);
      r.values = std::move(b.dist);
      r.parents = std::move(b.parent);
      break;
    }
    case App::kBfsForest:
    case App::kDfs: {
      auto f = app == App::kDfs ? baseline_dfs_forest(g) : baseline_bfs_forest(g);
      r.parents = std::move(f.parent);
      r.vertices = std::move(f.roots);
      break;
    }
    case App::kMatching: r.edges = baseline_matching(g).edges; break;
    case App::kMis: r.vertices = baseline_mis(g); break;
    case App::kColor: r.values = baseline_coloring(g, r.scope); break;
    case App::kKcore: {
      auto c = baseline_kcore(g);
      r.values = std::move(c.core);
      r.degeneracy = c.degeneracy;
      break;
    }
    case App::kEcc: {
      auto e = baseline_eccentricity_sweep(g);
      r.values = std::move(e.eccentricity);
      r.vertices = std::move(e.center);
      r.diameter = e.diameter;
      r.radius = e.radius;
      break;
    }
    case App::kMaxClique: r.vertices = baseline_maximal_clique(g); break;
  }
  return r;
}

AppResult run_on_dcc(App app, const DccRepresentation& dcc, const AppOptions& options) {
  AppResult r;
  r.app = app;
  r.n = dcc.num_vertices();
  r.scope = cover_universe(dcc.cover);
  switch (app) {
    case App::kCc: r.values = connected_components(dcc.cover).label; break;
    case App::kBfs: {
      r.source = pick_source(options, r.scope, r.n);
      auto b = bfs(dcc, r.source);
      r.values = std::move(b.dist);
      r.parents = std::move(b.parent);
      break;
    }
    case App::kBfsForest:
    case App::kDfs: {
      auto f = app == App::kDfs ? dfs_forest(dcc) : bfs_forest(dcc);
      r.parents = std::move(f.parent);
      r.vertices = std::move(f.roots);
      break;
    }
    case App::kMatching: r.edges = maximal_matching(dcc.cover).edges; break;
    case App::kMis: r.vertices = maximal_independent_set(dcc); break;
    case App::kColor: r.values = first_fit_coloring(dcc, r.scope); break;
    case App::kKcore: {
      auto c = k_core_decomposition(dcc);
      r.values = std::move(c.core);
      r.degeneracy = c.degeneracy;
      break;
    }
    case App::kEcc: {
      auto e = eccentricity_sweep(dcc);
      r.values = std::move(e.eccentricity);
      r.vertices = std::move(e.center);
      r.diameter = e.diameter;
      r.radius = e.radius;
      break;
    }
    case App::kMaxClique: r.vertices = maximal_clique(dcc); break;
  }
  return r;
}

AppResult run_on_encoded(App app, const EncodedCover& enc) {
  AppResult r;
  r.app = app;
  r.n = enc.n;
  if (app == App::kCc) {
    r.values = connected_components(enc).label;
    for (Vertex v = 0; v < r.n; ++v) {
      if (r.values[v] != kNoComponent) r.scope.push_back(v);
    }
  } else if (app == App::kMatching) {
    r.edges = maximal_matching(enc).edges;
  } else {
    throw std::invalid_argument(std::string(app_name(app)) + " needs the decoded cover and its dual");
  }
  return r;
}

void write_result(const AppResult& r, std::ostream& out) {
  auto id = [](Vertex v) { return static_cast<std::uint64_t>(v) + 1; };
  auto parent_id = [&](Vertex p) { return p == kNoVertex ? std::uint64_t{0} : id(p); };
  out << "% app=" << app_name(r.app);
  switch (r.app) {
    case App::kCc:
      out << " components=" << count_distinct(r.values, r.scope) << '\n';
      for (Vertex v : r.scope) out << id(v) << ' ' << r.values[v] + 1 << '\n';
      break;
    case App::kBfs:
      out << " source=" << id(r.source) << '\n';
      for (Vertex v = 0; v < r.n; ++v) {
        if (r.values[v] != kInfinity) out << id(v) << ' ' << r.values[v] << ' ' << parent_id(r.parents[v]) << '\n';
      }
      break;
    case App::kBfsForest:
    case App::kDfs:
      out << " roots=" << r.vertices.size() << '\n';
      for (Vertex v : r.scope) out << id(v) << ' ' << parent_id(r.parents[v]) << '\n';
      break;
    case App::kMatching:
      out << " edges=" << r.edges.size() << '\n';
      for (Edge e : r.edges) out << id(e.u) << ' ' << id(e.v) << '\n';
      break;
    case App::kMis:
    case App::kMaxClique:
      out << " size=" << r.vertices.size() << '\n';
      for (Vertex v : r.vertices) out << id(v) << '\n';
      break;
    case App::kColor: {
      std::uint32_t colors = 0;
      for (Vertex v : r.scope) colors = std::max(colors, r.values[v]);
      out << " colors=" << colors << '\n';
      for (Vertex v : r.scope) out << id(v) << ' ' << r.values[v] << '\n';
      break;
    }
    case App::kKcore:
      out << " degeneracy=" << r.degeneracy << '\n';
      for (Vertex v : r.scope) out << id(v) << ' ' << r.values[v] << '\n';
      break;
    case App::kEcc:
      out << " diameter=" << r.diameter << " radius=" << r.radius << '\n';
      out << "% center";
      for (Vertex v : r.vertices) out << ' ' << id(v);
      out << '\n';
      for (Vertex v : r.scope) out << id(v) << ' ' << r.values[v] << '\n';
      break;
  }
}

bool equivalent_results(const Graph& g, const AppResult& a, const AppResult& b, std::string* why) {
  if (a.app != b.app) return fail(why, "different apps");
  if (a.n != g.num_vertices() || b.n != g.num_vertices()) return fail(why, "vertex counts differ");
  if (!check_one(g, a, why) || !check_one(g, b, why)) return false;
  switch (a.app) {
    case App::kCc:
      if (a.values != b.values) return fail(why, "component partitions differ");
      return true;
    case App::kBfs:
      if (a.source != b.source) return fail(why, "different sources");
      if (a.values != b.values) return fail(why, "distances differ");
      return true;
    case App::kBfsForest:
    case App::kDfs:
      if (a.vertices != b.vertices) return fail(why, "forest roots differ");
      return true;
    case App::kColor:
      if (a.values != b.values) return fail(why, "colorings differ");
      return true;
    case App::kKcore:
      if (a.values != b.values) return fail(why, "coreness differs");
      return true;
    case App::kEcc:
      if (a.diameter != b.diameter || a.radius != b.radius || a.vertices != b.vertices) {
        return fail(why, "diameter, radius or center differ");
      }
      return true;
    case App::kMatching:
    case App::kMis:
    case App::kMaxClique: return true;
  }
  return true;
}

MemoryUnits adjacency_memory_units(const Graph& g) {
  MemoryUnits m;
  m.parts = {{"adjacency", 2 * g.num_edges()}, {"offsets", g.num_vertices()}};
  m.total = 2 * g.num_edges() + g.num_vertices();
  return m;
}

MemoryUnits dcc_memory_units(App app, const CliqueCover& cover) {
  const std::size_t size = cover.size();
  const std::size_t k = cover.num_cliques();
  const std::size_t universe = cover_universe(cover).size();
  MemoryUnits m;
  m.parts.emplace_back("cover", size + k);
  if (app_needs_dual(app)) m.parts.emplace_back("dual", size + universe);
  switch (app) {
    case App::kBfs:
    case App::kBfsForest:
    case App::kEcc: m.parts.emplace_back("scanned_flags", k); break;
    case App::kDfs: m.parts.emplace_back("clique_cursors", k); break;
    case App::kKcore: m.parts.emplace_back("seen_stamps", universe); break;
    default: break;
  }
  for (const auto& [name, units] : m.parts) m.total += units;
  return m;
}

}  // namespace dcc
