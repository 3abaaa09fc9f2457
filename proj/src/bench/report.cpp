#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "dcc/bench.hpp"
#include "dcc/cover_io.hpp"
#include "dcc/cover_stats.hpp"
#include "dcc/degeneracy.hpp"
#include "dcc/graph_io.hpp"
#include "dcc/validation.hpp"

namespace dcc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

CliqueCover load_any_cover(const std::filesystem::path& path) {
  return is_encoded_file(path) ? decode_cover(load_encoded(path)) : load_cover(path);
}

// Reads "% constructor=NAME" from the comment lines of a text cover.
std::string constructor_from_comments(const std::filesystem::path& path) {
  if (is_encoded_file(path)) return {};
  std::ifstream in(path);
  std::string line;
  const std::string key = "% constructor=";
  while (std::getline(in, line) && !line.empty() && line[0] == '%') {
    if (line.rfind(key, 0) == 0) return line.substr(key.size());
  }
  return {};
}

struct ArmRun {
  ArmTiming timing;
  AppResult result;
};

ArmRun adjacency_arm(App app, const std::filesystem::path& graph_file, const AppOptions& options) {
  ArmRun run;
  auto t0 = Clock::now();
  const Graph g = load_graph(graph_file);
  run.timing.read_time_s = seconds_since(t0);
  t0 = Clock::now();
  run.result = run_on_graph(app, g, options);
  run.timing.compute_time_s = seconds_since(t0);
  return run;
}

ArmRun dcc_arm(App app, const std::filesystem::path& cover_file, const AppOptions& options) {
  ArmRun run;
  auto t0 = Clock::now();
  if (is_encoded_file(cover_file)) {
    EncodedCover enc = load_encoded(cover_file);
    if (!app_needs_dual(app)) {
      run.timing.read_time_s = seconds_since(t0);
      t0 = Clock::now();
      run.result = run_on_encoded(app, enc);
      run.timing.compute_time_s = seconds_since(t0);
      return run;
    }
    CliqueCover cover = decode_cover(enc);
    run.timing.read_time_s = seconds_since(t0);
    t0 = Clock::now();
    const DccRepresentation dcc = DccRepresentation::from_cover(std::move(cover));
    run.timing.dual_build_time_s = seconds_since(t0);
    t0 = Clock::now();
    run.result = run_on_dcc(app, dcc, options);
    run.timing.compute_time_s = seconds_since(t0);
    return run;
  }
  CliqueCover cover = load_cover(cover_file);
  run.timing.read_time_s = seconds_since(t0);
  DccRepresentation dcc;
  if (app_needs_dual(app)) {
    t0 = Clock::now();
    dcc = DccRepresentation::from_cover(std::move(cover));
    run.timing.dual_build_time_s = seconds_since(t0);
  } else {
    dcc.cover = std::move(cover);
  }
  t0 = Clock::now();
  run.result = run_on_dcc(app, dcc, options);
  run.timing.compute_time_s = seconds_since(t0);
  return run;
}

void accumulate(ArmTiming& sum, const ArmTiming& t) {
  sum.read_time_s += t.read_time_s;
  sum.dual_build_time_s += t.dual_build_time_s;
  sum.compute_time_s += t.compute_time_s;
}

void average(ArmTiming& t, std::size_t reps) {
  t.read_time_s /= static_cast<double>(reps);
  t.dual_build_time_s /= static_cast<double>(reps);
  t.compute_time_s /= static_cast<double>(reps);
  t.total_time_s = t.read_time_s + t.dual_build_time_s + t.compute_time_s;
}

nlohmann::ordered_json timing_json(const ArmTiming& t) {
  return {{"read_time_s", t.read_time_s},
          {"dual_build_time_s", t.dual_build_time_s},
          {"compute_time_s", t.compute_time_s},
          {"total_time_s", t.total_time_s}};
}

nlohmann::ordered_json units_json(const MemoryUnits& m) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::object();
  for (const auto& [name, units] : m.parts) parts[name] = units;
  return parts;
}

}  // namespace

BenchReport run_bench(const std::filesystem::path& graph_file, const std::filesystem::path& cover_file,
                      const BenchOptions& options) {
  if (options.repetitions == 0) throw std::invalid_argument("repetitions must be positive");
  const Graph g = load_graph(graph_file);
  const CliqueCover cover = load_any_cover(cover_file);
  auto report_check = validate_cover(g, cover);
  if (!report_check.valid()) throw std::runtime_error("invalid cover: " + report_check.describe());

  BenchReport report;
  report.graph = graph_file.filename().string();
  report.cover = cover_file.filename().string();
  report.constructor = options.constructor.empty() ? constructor_from_comments(cover_file) : options.constructor;
  if (report.constructor.empty()) report.constructor = "unknown";
  report.n = g.num_vertices();
  report.m = g.num_edges();
  const CoverStats stats = cover_stats(g, cover, degeneracy_ordering(g).coreness);
  report.num_cliques = stats.num_cliques;
  report.size_cover = stats.assignments;
  report.compression_ratio = stats.compression_ratio;
  report.ub_opt = stats.ub_opt;
  report.graph_bytes = std::filesystem::file_size(graph_file);
  report.cover_bytes = std::filesystem::file_size(cover_file);
  report.byte_ratio = report.cover_bytes == 0 ? 0.0
                                              : static_cast<double>(report.graph_bytes) /
                                                    static_cast<double>(report.cover_bytes);
  report.repetitions = options.repetitions;

  for (App app : options.apps) {
    AppRecord rec;
    rec.app = std::string(app_name(app));
    AppResult adj_result, dcc_result;
    for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
      ArmRun a, d;
      try {
        a = adjacency_arm(app, graph_file, options.app_options);
      } catch (const std::exception& e) {
        throw std::runtime_error(rec.app + " on adjacency lists: " + e.what());
      }
      try {
        d = dcc_arm(app, cover_file, options.app_options);
      } catch (const std::exception& e) {
        throw std::runtime_error(rec.app + " on the cover: " + e.what());
      }
      accumulate(rec.adjacency, a.timing);
      accumulate(rec.dcc, d.timing);
      if (rep == 0) {
        adj_result = std::move(a.result);
        dcc_result = std::move(d.result);
      }
    }
    average(rec.adjacency, options.repetitions);
    average(rec.dcc, options.repetitions);
    rec.mem_adj = adjacency_memory_units(g);
    rec.mem_dcc = dcc_memory_units(app, cover);
    rec.mem_ratio = static_cast<double>(rec.mem_adj.total) / static_cast<double>(rec.mem_dcc.total);
    rec.equivalent = equivalent_results(g, adj_result, dcc_result, &rec.mismatch);
    report.apps.push_back(std::move(rec));
  }
  return report;
}

void write_report_json(const BenchReport& r, std::ostream& out) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph;
  j["cover"] = r.cover;
  j["constructor"] = r.constructor;
  j["n"] = r.n;
  j["m"] = r.m;
  j["num_cliques"] = r.num_cliques;
  j["size_cover"] = r.size_cover;
  j["compression_ratio"] = r.compression_ratio;
  j["ub_opt"] = r.ub_opt;
  j["storage"] = {{"graph_bytes", r.graph_bytes}, {"cover_bytes", r.cover_bytes}, {"byte_ratio", r.byte_ratio}};
  j["repetitions"] = r.repetitions;
  j["apps"] = nlohmann::ordered_json::array();
  for (const AppRecord& a : r.apps) {
    nlohmann::ordered_json rec;
    rec["app"] = a.app;
    rec["read_time_s"] = a.dcc.read_time_s;
    rec["dual_build_time_s"] = a.dcc.dual_build_time_s;
    rec["compute_time_s"] = a.dcc.compute_time_s;
    rec["total_time_s"] = a.dcc.total_time_s;
    rec["mem_units_adj"] = a.mem_adj.total;
    rec["mem_units_dcc"] = a.mem_dcc.total;
    rec["mem_ratio"] = a.mem_ratio;
    rec["mem_breakdown_adj"] = units_json(a.mem_adj);
    rec["mem_breakdown_dcc"] = units_json(a.mem_dcc);
    rec["adjacency"] = timing_json(a.adjacency);
    rec["equivalent"] = a.equivalent;
    if (!a.equivalent) rec["mismatch"] = a.mismatch;
    j["apps"].push_back(std::move(rec));
  }
  out << j.dump(2) << '\n';
}

void write_report_csv(const BenchReport& r, std::ostream& out) {
  out << "graph,constructor,n,m,num_cliques,size_cover,compression_ratio,ub_opt,repetitions,app,"
         "read_time_s,dual_build_time_s,compute_time_s,total_time_s,adj_read_time_s,adj_compute_time_s,"
         "adj_total_time_s,mem_units_adj,mem_units_dcc,mem_ratio,equivalent\n";
  for (const AppRecord& a : r.apps) {
    out << r.graph << ',' << r.constructor << ',' << r.n << ',' << r.m << ',' << r.num_cliques << ','
        << r.size_cover << ',' << r.compression_ratio << ',' << r.ub_opt << ',' << r.repetitions << ',' << a.app
        << ',' << a.dcc.read_time_s << ',' << a.dcc.dual_build_time_s << ',' << a.dcc.compute_time_s << ','
        << a.dcc.total_time_s << ',' << a.adjacency.read_time_s << ',' << a.adjacency.compute_time_s << ','
        << a.adjacency.total_time_s << ',' << a.mem_adj.total << ',' << a.mem_dcc.total << ',' << a.mem_ratio
        << ',' << (a.equivalent ? "true" : "false") << '\n';
  }
}

}  // namespace dcc
