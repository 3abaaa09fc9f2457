#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dcc/bench.hpp"
#include "dcc/constructors.hpp"
#include "dcc/cover_io.hpp"
#include "dcc/cover_stats.hpp"
#include "dcc/degeneracy.hpp"
#include "dcc/encoding.hpp"
#include "dcc/generators.hpp"
#include "dcc/graph_io.hpp"
#include "dcc/minimality.hpp"
#include "dcc/text_reader.hpp"
#include "dcc/validation.hpp"

namespace dcc {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs emit on the file at path, or on out when path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write,
          bool binary = false) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, binary ? std::ios::binary : std::ios::out);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  write(file);
  if (!file) throw std::runtime_error("write to " + path + " failed");
}

// Prefixes parse and decode errors with the file name.
template <class F>
auto from_file(const std::string& path, F&& load) {
  try {
    return load();
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const EncodingError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  return from_file(path, [&] { return load_graph(path); });
}

CliqueCover load_any_cover(const std::string& path) {
  return from_file(path, [&] { return is_encoded_file(path) ? decode_cover(load_encoded(path)) : load_cover(path); });
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

// ---- gen

struct GenArgs {
  std::string family;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
  std::string out;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("DCC_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    throw UsageError(std::string("DCC_SEED is not an unsigned integer: ") + env);
  }
}

template <class T>
T need(const std::optional<T>& v, const char* flag, const std::string& family) {
  if (!v) throw UsageError(family + " needs " + flag);
  return *v;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const std::string& f = a.family;
  std::ostringstream note;
  note << "% family=" << f;
  Graph g;
  try {
    if (f == "er") {
      const std::uint64_t seed = resolve_seed(a.seed);
      g = gen_er(need(a.n, "--n", f), need(a.p, "--p", f), seed);
      note << " n=" << *a.n << " p=" << *a.p << " seed=" << seed;
    } else if (f == "ba" || f == "ua") {
      const std::uint64_t seed = resolve_seed(a.seed);
      const std::size_t n = need(a.n, "--n", f);
      const std::size_t k = need(a.k, "--k", f);
      g = f == "ba" ? gen_ba(n, k, seed) : gen_ua(n, k, seed);
      note << " n=" << n << " k=" << k << " seed=" << seed;
    } else if (f == "clique-minus-matching") {
      g = gen_clique_minus_matching(need(a.k, "--k", f));
      note << " k=" << *a.k;
    } else if (f == "minimality-example") {
      g = gen_minimality_example();
    } else {
      const std::size_t n = need(a.n, "--n", f);
      if (f == "matched-cliques") g = gen_matched_cliques(n);
      else if (f == "abu") g = gen_abu_family(n);
      else if (f == "separation") g = gen_separation_family(n);
      else if (f == "complete") g = gen_complete(n);
      else throw UsageError("unknown family: " + f);
      note << " n=" << n;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(a.out, out, [&](std::ostream& s) {
    s << note.str() << '\n';
    write_graph(g, s);
  });
  return 0;
}

// ---- construct

struct ConstructArgs {
  std::string graph;
  std::string algo;
  bool assignment_minimal = false;
  std::string format = "text";
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto algo = parse_constructor(a.algo);
  if (!algo) throw UsageError("unknown constructor: " + a.algo);
  const Graph g = read_graph_file(a.graph);
  CliqueCover cover = construct(g, *algo).cover;
  if (a.assignment_minimal) cover = make_assignment_minimal(g, cover);
  if (a.format == "encoded") {
    emit(a.out, out, [&](std::ostream& s) { write_encoded(encode_cover(cover), s); }, true);
  } else {
    emit(a.out, out, [&](std::ostream& s) {
      s << "% constructor=" << a.algo << (a.assignment_minimal ? "+am" : "") << '\n';
      write_cover(cover, s);
    });
  }
  const CoverStats st = cover_stats(g, cover, degeneracy_ordering(g).coreness);
  // With no --out the cover went to standard output; keep it parseable.
  std::ostream& line = a.out.empty() ? err : out;
  line << "cliques=" << st.num_cliques << " assignments=" << st.assignments
       << " compression_ratio=" << format_double(st.compression_ratio) << " ub_opt=" << format_double(st.ub_opt)
       << '\n';
  return 0;
}

// ---- convert

struct ConvertArgs {
  std::string input;
  std::string to;
  std::string out;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
  const CliqueCover cover = load_any_cover(a.input);
  if (a.to == "encoded") {
    emit(a.out, out, [&](std::ostream& s) { write_encoded(encode_cover(cover), s); }, true);
  } else {
    emit(a.out, out, [&](std::ostream& s) { write_cover(cover, s); });
  }
  return 0;
}

// ---- stats

struct StatsArgs {
  std::string graph;
  std::string cover;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(a.graph);
  const CliqueCover cover = load_any_cover(a.cover);
  const ValidationReport report = validate_cover(g, cover);
  if (!report.valid()) {
    err << "dcc: invalid cover: " << report.describe() << '\n';
    return 1;
  }
  const GraphStats gs = graph_stats(g);
  const CoverStats cs = cover_stats(g, cover, degeneracy_ordering(g).coreness);
  nlohmann::ordered_json j;
  j["n"] = gs.n;
  j["m"] = gs.m;
  j["min_degree"] = gs.min_degree;
  j["max_degree"] = gs.max_degree;
  j["degeneracy"] = gs.degeneracy;
  j["clique_distance"] = gs.clique_distance;
  j["num_cliques"] = cs.num_cliques;
  j["assignments"] = cs.assignments;
  j["max_clique_size"] = cs.max_clique_size;
  j["compression_ratio"] = cs.compression_ratio;
  j["ub_opt"] = cs.ub_opt;
  j["min_assignments"] = cs.min_assignments;
  out << j.dump(2) << '\n';
  return 0;
}

// ---- run

struct RunArgs {
  std::string app;
  std::string input;
  std::optional<std::size_t> source;
  std::string format = "auto";
  std::string out;
};

std::string detect_format(const std::string& path) {
  if (is_encoded_file(path)) return "encoded";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  detail::TextReader reader(in);
  std::vector<std::uint64_t> header;
  if (!reader.next(header)) throw ParseError(0, "missing header");
  if (header.size() == 2) return "graph";
  if (header.size() == 3) return "cover";
  throw ParseError(reader.line(), "header is neither \"n m\" nor \"n k s\"");
}

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  const auto app = parse_app(a.app);
  if (!app) throw UsageError("unknown app: " + a.app);
  AppOptions options;
  if (a.source) {
    if (*a.source == 0) throw UsageError("--source is 1-based");
    options.source = static_cast<Vertex>(*a.source - 1);
  }
  const std::string format = a.format == "auto" ? detect_format(a.input) : a.format;

  ArmTiming t;
  AppResult result;
  auto t0 = Clock::now();
  if (format == "graph") {
    const Graph g = read_graph_file(a.input);
    t.read_time_s = seconds_since(t0);
    t0 = Clock::now();
    result = run_on_graph(*app, g, options);
    t.compute_time_s = seconds_since(t0);
  } else if (format == "encoded" && !app_needs_dual(*app)) {
    const EncodedCover enc = from_file(a.input, [&] { return load_encoded(a.input); });
    t.read_time_s = seconds_since(t0);
    t0 = Clock::now();
    result = run_on_encoded(*app, enc);
    t.compute_time_s = seconds_since(t0);
  } else {
    CliqueCover cover = from_file(a.input, [&] {
      return format == "encoded" ? decode_cover(load_encoded(a.input)) : load_cover(a.input);
    });
    t.read_time_s = seconds_since(t0);
    DccRepresentation dcc;
    if (app_needs_dual(*app)) {
      t0 = Clock::now();
      dcc = DccRepresentation::from_cover(std::move(cover));
      t.dual_build_time_s = seconds_since(t0);
    } else {
      dcc.cover = std::move(cover);
    }
    t0 = Clock::now();
    result = run_on_dcc(*app, dcc, options);
    t.compute_time_s = seconds_since(t0);
  }
  t.total_time_s = t.read_time_s + t.dual_build_time_s + t.compute_time_s;

  emit(a.out, out, [&](std::ostream& s) { write_result(result, s); });
  err << "read_time_s=" << t.read_time_s << " dual_build_time_s=" << t.dual_build_time_s
      << " compute_time_s=" << t.compute_time_s << " total_time_s=" << t.total_time_s << '\n';
  if (format != "graph" && result.scope.size() < result.n) {
    err << "vertices_outside_cover=" << result.n - result.scope.size() << '\n';
  }
  return 0;
}

// ---- bench

struct BenchArgs {
  std::string graph;
  std::string cover;
  std::vector<std::string> apps;
  std::size_t reps = 5;
  std::optional<std::size_t> source;
  std::string format = "json";
  std::string constructor;
  std::string out;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  BenchOptions options;
  for (const std::string& name : a.apps) {
    const auto app = parse_app(name);
    if (!app) throw UsageError("unknown app: " + name);
    options.apps.push_back(*app);
  }
  if (options.apps.empty()) options.apps.assign(std::begin(kAllApps), std::end(kAllApps));
  if (a.reps == 0) throw UsageError("--reps must be positive");
  options.repetitions = a.reps;
  if (a.source) {
    if (*a.source == 0) throw UsageError("--source is 1-based");
    options.app_options.source = static_cast<Vertex>(*a.source - 1);
  }
  options.constructor = a.constructor;

  const BenchReport report = run_bench(a.graph, a.cover, options);
  emit(a.out, out, [&](std::ostream& s) {
    if (a.format == "csv") write_report_csv(report, s);
    else write_report_json(report, s);
  });
  int status = 0;
  for (const AppRecord& rec : report.apps) {
    if (!rec.equivalent) {
      err << "dcc: " << rec.app << ": results differ: " << rec.mismatch << '\n';
      status = 1;
    }
  }
  return status;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual clique cover toolkit"};
  app.name("dcc");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
  gen_cmd->add_option("family", gen.family,
                      "er, ba, ua, matched-cliques, clique-minus-matching, abu, separation, complete, "
                      "minimality-example")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices or family order");
  gen_cmd->add_option("--k", gen.k, "Attachment count (ba, ua) or order (clique-minus-matching)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (er)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Random seed; defaults to $DCC_SEED, then 1");
  gen_cmd->add_option("--out", gen.out, "Output file (default: standard output)");

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "Build a clique cover of a graph");
  con_cmd->add_option("graph", con.graph, "Graph file")->required();
  con_cmd->add_option("--algo", con.algo, "lp, sp, ga, la or pl")
      ->required()
      ->check(CLI::IsMember({"lp", "sp", "ga", "la", "pl"}));
  con_cmd->add_flag("--assignment-minimal", con.assignment_minimal, "Drop removable vertex-clique assignments");
  con_cmd->add_option("--format", con.format, "text or encoded")->check(CLI::IsMember({"text", "encoded"}));
  con_cmd->add_option("--out", con.out, "Cover file (default: standard output)");

  ConvertArgs conv;
  auto* conv_cmd = app.add_subcommand("convert", "Convert a cover between text and encoded form");
  conv_cmd->add_option("input", conv.input, "Cover file")->required();
  conv_cmd->add_option("--to", conv.to, "text or encoded")->required()->check(CLI::IsMember({"text", "encoded"}));
  conv_cmd->add_option("--out", conv.out, "Output file (default: standard output)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Validate a cover and report its statistics as JSON");
  stats_cmd->add_option("graph", stats.graph, "Graph file")->required();
  stats_cmd->add_option("cover", stats.cover, "Cover file, text or encoded")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run one application on a graph or cover");
  run_cmd->add_option("app", run.app, "cc, bfs, bfs-forest, dfs, matching, mis, color, kcore, ecc, maxclique")
      ->required();
  run_cmd->add_option("input", run.input, "Graph, text cover or encoded cover")->required();
  run_cmd->add_option("--source", run.source, "BFS source, 1-based");
  run_cmd->add_option("--format", run.format, "auto, graph, cover or encoded")
      ->check(CLI::IsMember({"auto", "graph", "cover", "encoded"}));
  run_cmd->add_option("--out", run.out, "Result file (default: standard output)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time applications on adjacency lists and on a cover");
  bench_cmd->add_option("graph", bench.graph, "Graph file")->required();
  bench_cmd->add_option("cover", bench.cover, "Cover file, text or encoded")->required();
  bench_cmd->add_option("--apps", bench.apps, "Comma-separated apps (default: all)")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per app");
  bench_cmd->add_option("--source", bench.source, "BFS source, 1-based");
  bench_cmd->add_option("--format", bench.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bench_cmd->add_option("--constructor", bench.constructor, "Constructor name for the report");
  bench_cmd->add_option("--out", bench.out, "Report file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*con_cmd) return cmd_construct(con, out, err);
    if (*conv_cmd) return cmd_convert(conv, out);
    if (*stats_cmd) return cmd_stats(stats, out, err);
    if (*run_cmd) return cmd_run(run, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    err << "dcc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "dcc: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dcc
