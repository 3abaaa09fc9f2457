#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcc/algorithms.hpp"
#include "dcc/cover.hpp"
#include "dcc/encoding.hpp"
#include "dcc/graph.hpp"

namespace dcc {

enum class App { kCc, kBfs, kBfsForest, kDfs, kMatching, kMis, kColor, kKcore, kEcc, kMaxClique };

inline constexpr App kAllApps[] = {App::kCc,  App::kBfs,   App::kBfsForest, App::kDfs, App::kMatching,
                                   App::kMis, App::kColor, App::kKcore,     App::kEcc, App::kMaxClique};

// cc, bfs, bfs-forest, dfs, matching, mis, color, kcore, ecc, maxclique
std::string_view app_name(App app);
std::optional<App> parse_app(std::string_view name);
// cc and matching read the cliques only.
bool app_needs_dual(App app);

struct AppOptions {
  // BFS source; kNoVertex means the smallest vertex of the universe.
  Vertex source = kNoVertex;
};

// Result of one application run in a representation-neutral form.
struct AppResult {
  App app = App::kCc;
  std::size_t n = 0;
  std::vector<std::uint32_t> values;  // per vertex: component, dist, color, core or eccentricity
  std::vector<Vertex> parents;        // bfs, bfs-forest, dfs
  std::vector<Vertex> vertices;       // roots, independent set, clique or center
  std::vector<Edge> edges;            // matching
  std::vector<Vertex> scope;          // vertices the run ranged over, ascending
  Vertex source = kNoVertex;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  std::uint32_t degeneracy = 0;
};

AppResult run_on_graph(App app, const Graph& g, const AppOptions& options = {});
AppResult run_on_dcc(App app, const DccRepresentation& dcc, const AppOptions& options = {});
// cc and matching only; other apps need the decoded cover and dual.
AppResult run_on_encoded(App app, const EncodedCover& enc);

// Canonical text form with 1-based ids.
void write_result(const AppResult& r, std::ostream& out);

// Checks that two results for the same graph agree under the app's
// equivalence: equal distances, partitions, colors or cores, or both
// valid and maximal for matching, independent set and clique. On mismatch
// returns false and sets *why.
bool equivalent_results(const Graph& g, const AppResult& a, const AppResult& b, std::string* why = nullptr);

// Memory in units (one unit per stored id, label, flag or counter).
struct MemoryUnits {
  std::size_t total = 0;
  std::vector<std::pair<std::string, std::size_t>> parts;
};

// 2m + n for every app.
MemoryUnits adjacency_memory_units(const Graph& g);
MemoryUnits dcc_memory_units(App app, const CliqueCover& cover);

struct ArmTiming {
  double read_time_s = 0.0;
  double dual_build_time_s = 0.0;
  double compute_time_s = 0.0;
  double total_time_s = 0.0;
};

struct AppRecord {
  std::string app;
  ArmTiming dcc;        // cover arm
  ArmTiming adjacency;  // adjacency-list arm; dual_build is always 0
  MemoryUnits mem_adj;
  MemoryUnits mem_dcc;
  double mem_ratio = 0.0;
  bool equivalent = false;
  std::string mismatch;
};

struct BenchReport {
  std::string graph;
  std::string cover;
  std::string constructor;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t num_cliques = 0;
  std::size_t size_cover = 0;
  double compression_ratio = 0.0;
  double ub_opt = 0.0;
  std::uintmax_t graph_bytes = 0;
  std::uintmax_t cover_bytes = 0;
  double byte_ratio = 0.0;
  std::size_t repetitions = 0;
  std::vector<AppRecord> apps;
};

struct BenchOptions {
  std::vector<App> apps;
  std::size_t repetitions = 5;
  AppOptions app_options;
  std::string constructor;  // empty: read from the cover file comment if any
};

// Runs every app on both arms, each repetition reading its input from disk.
// Throws on unreadable input or an invalid cover; a result mismatch is
// recorded in the report.
BenchReport run_bench(const std::filesystem::path& graph_file, const std::filesystem::path& cover_file,
                      const BenchOptions& options);

void write_report_json(const BenchReport& report, std::ostream& out);
void write_report_csv(const BenchReport& report, std::ostream& out);

}  // namespace dcc
