#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dcc/cover_io.hpp"
#include "dcc/encoding.hpp"
#include "dcc/graph_io.hpp"
#include "json.hpp"

using namespace dcc;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run dcc_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dcc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("dcc_cli_test_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Subset of JSON Schema: type, required, properties, items, enum, minimum.
bool conforms(const json& v, const json& schema, std::string& why, const std::string& at = "$") {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                    (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
                    (t == "integer" && v.is_number_integer()) || (t == "number" && v.is_number());
    if (!ok) {
      why = at + ": expected " + t;
      return false;
    }
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>()) {
    why = at + ": below minimum";
    return false;
  }
  if (schema.contains("enum") && std::find(schema["enum"].begin(), schema["enum"].end(), v) == schema["enum"].end()) {
    why = at + ": not in enum";
    return false;
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!v.contains(key.get<std::string>())) {
        why = at + ": missing " + key.get<std::string>();
        return false;
      }
    }
  }
  if (schema.contains("properties") && v.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (v.contains(key) && !conforms(v[key], sub, why, at + "." + key)) return false;
    }
  }
  if (schema.contains("items") && v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!conforms(v[i], schema["items"], why, at + "[" + std::to_string(i) + "]")) return false;
    }
  }
  return true;
}

const char* kTriangleCover = "3 1 3\n1 2 3\n";
const char* kTriangleGraph = "3 3\n1 2\n1 3\n2 3\n";
const char* kPathGraph = "3 2\n1 2\n2 3\n";
const char* kPathCover = "3 2 4\n1 2\n2 3\n";

}  // namespace

TEST_CASE("usage") {
  CHECK(dcc_cli({}).code == 2);
  CHECK(dcc_cli({"--help"}).code == 0);
  CHECK(dcc_cli({"frobnicate"}).code == 2);
  CHECK(dcc_cli({"gen"}).code == 2);
}

TEST_CASE("gen") {
  TempDir dir;
  const Run mc = dcc_cli({"gen", "matched-cliques", "--n", "64", "--out", dir / "mc.txt"});
  REQUIRE(mc.code == 0);
  const Graph g = load_graph(dir / "mc.txt");
  CHECK(g.num_vertices() == 128);
  CHECK(g.num_edges() == 64 * 63 + 64);

  const Run a = dcc_cli({"gen", "er", "--n", "100", "--p", "0.3", "--seed", "7"});
  const Run b = dcc_cli({"gen", "er", "--n", "100", "--p", "0.3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != dcc_cli({"gen", "er", "--n", "100", "--p", "0.3", "--seed", "8"}).out);

  ::setenv("DCC_SEED", "7", 1);
  CHECK(dcc_cli({"gen", "er", "--n", "100", "--p", "0.3"}).out == a.out);
  ::setenv("DCC_SEED", "seven", 1);
  CHECK(dcc_cli({"gen", "er", "--n", "100", "--p", "0.3"}).code == 2);
  ::unsetenv("DCC_SEED");
  CHECK(dcc_cli({"gen", "er", "--n", "100", "--p", "0.3"}).out ==
        dcc_cli({"gen", "er", "--n", "100", "--p", "0.3", "--seed", "1"}).out);

  CHECK(dcc_cli({"gen", "er", "--n", "10", "--p", "1.5"}).code == 2);
  CHECK(dcc_cli({"gen", "er", "--n", "10"}).code == 2);
  CHECK(dcc_cli({"gen", "ba", "--n", "5", "--k", "5"}).code == 2);
  CHECK(dcc_cli({"gen", "clique-minus-matching", "--k", "3"}).code == 2);
  CHECK(dcc_cli({"gen", "nonsense", "--n", "3"}).code == 2);
  for (const char* family : {"complete", "abu", "separation"}) {
    CHECK(dcc_cli({"gen", family, "--n", "3"}).code == 0);
  }
  CHECK(dcc_cli({"gen", "clique-minus-matching", "--k", "4"}).code == 0);
  CHECK(dcc_cli({"gen", "ua", "--n", "30", "--k", "2"}).code == 0);
  CHECK(dcc_cli({"gen", "minimality-example"}).code == 0);
}

TEST_CASE("construct") {
  TempDir dir;
  write_file(dir / "k3.txt", kTriangleGraph);
  const Run k3 = dcc_cli({"construct", dir / "k3.txt", "--algo", "ga", "--out", dir / "k3.cover"});
  REQUIRE(k3.code == 0);
  CHECK(load_cover(dir / "k3.cover").num_cliques() == 1);
  CHECK(k3.out.rfind("cliques=1 ", 0) == 0);

  REQUIRE(dcc_cli({"gen", "matched-cliques", "--n", "64", "--out", dir / "mc.txt"}).code == 0);
  const Run sp = dcc_cli({"construct", dir / "mc.txt", "--algo", "sp", "--out", dir / "mc.cover"});
  CHECK(sp.out.find("cliques=66 assignments=256 compression_ratio=32") != std::string::npos);
  CHECK(read_file(dir / "mc.cover").rfind("% constructor=sp\n", 0) == 0);

  // Cover on standard output, stats on standard error.
  const Run piped = dcc_cli({"construct", dir / "k3.txt", "--algo", "lp"});
  CHECK(piped.out.find("1 2 3") != std::string::npos);
  CHECK(piped.err.find("cliques=1") != std::string::npos);

  REQUIRE(dcc_cli({"gen", "er", "--n", "60", "--p", "0.4", "--seed", "3", "--out", dir / "er.txt"}).code == 0);
  for (const char* algo : {"lp", "sp", "ga", "la", "pl"}) {
    REQUIRE(dcc_cli({"construct", dir / "er.txt", "--algo", algo, "--out", dir / "a"}).code == 0);
    REQUIRE(dcc_cli({"construct", dir / "er.txt", "--algo", algo, "--assignment-minimal", "--out", dir / "b"})
                .code == 0);
    CHECK(load_cover(dir / "b").size() <= load_cover(dir / "a").size());
  }

  const Run enc = dcc_cli({"construct", dir / "er.txt", "--algo", "ga", "--format", "encoded", "--out", dir / "e"});
  CHECK(enc.code == 0);
  CHECK(is_encoded_file(dir / "e"));

  CHECK(dcc_cli({"construct", dir / "er.txt", "--algo", "zz"}).code == 2);
  CHECK(dcc_cli({"construct", dir / "missing.txt", "--algo", "sp"}).code == 1);
  write_file(dir / "bad.txt", "3 1\n1 9\n");
  const Run bad = dcc_cli({"construct", dir / "bad.txt", "--algo", "sp"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("stats") {
  TempDir dir;
  write_file(dir / "k4.txt", "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  write_file(dir / "k4.cover", "4 1 4\n1 2 3 4\n");
  const Run k4 = dcc_cli({"stats", dir / "k4.txt", dir / "k4.cover"});
  REQUIRE(k4.code == 0);
  const json j = json::parse(k4.out);
  CHECK(j["compression_ratio"] == 3.0);
  CHECK(j["ub_opt"] == 3.0);
  CHECK(j["clique_distance"] == 1);

  write_file(dir / "p3.txt", kPathGraph);
  write_file(dir / "p3.cover", kPathCover);
  CHECK(json::parse(dcc_cli({"stats", dir / "p3.txt", dir / "p3.cover"}).out)["compression_ratio"] == 1.0);

  write_file(dir / "bad.cover", kTriangleCover);
  const Run bad = dcc_cli({"stats", dir / "p3.txt", dir / "bad.cover"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("lacks edge {1,3}") != std::string::npos);

  write_file(dir / "wide.cover", "5 2 4\n1 2\n2 3\n");
  CHECK(dcc_cli({"stats", dir / "p3.txt", dir / "wide.cover"}).code == 1);
}

TEST_CASE("convert") {
  TempDir dir;
  write_file(dir / "c.txt", "6 3 8\n1 2 3\n2 5\n3 4 6\n");
  REQUIRE(dcc_cli({"convert", dir / "c.txt", "--to", "encoded", "--out", dir / "c.bin"}).code == 0);
  REQUIRE(dcc_cli({"convert", dir / "c.bin", "--to", "text", "--out", dir / "back.txt"}).code == 0);
  CHECK(read_file(dir / "back.txt") == read_file(dir / "c.txt"));
  CHECK(dcc_cli({"convert", dir / "c.txt", "--to", "xml"}).code == 2);
  write_file(dir / "junk.bin", "DCCE\x07");
  CHECK(dcc_cli({"convert", dir / "junk.bin", "--to", "text"}).code == 1);
}

TEST_CASE("run") {
  TempDir dir;
  write_file(dir / "k3.cover", kTriangleCover);
  const Run cc = dcc_cli({"run", "cc", dir / "k3.cover"});
  REQUIRE(cc.code == 0);
  CHECK(cc.out.find("components=1") != std::string::npos);
  CHECK(cc.err.find("total_time_s=") != std::string::npos);

  write_file(dir / "p3.cover", kPathCover);
  const Run bfs = dcc_cli({"run", "bfs", dir / "p3.cover", "--source", "1", "--out", dir / "dist.txt"});
  REQUIRE(bfs.code == 0);
  CHECK(read_file(dir / "dist.txt") == "% app=bfs source=1\n1 0 0\n2 1 1\n3 2 2\n");

  write_file(dir / "p3.txt", kPathGraph);
  const Run on_graph = dcc_cli({"run", "bfs", dir / "p3.txt", "--source", "1"});
  CHECK(on_graph.out == read_file(dir / "dist.txt"));

  REQUIRE(dcc_cli({"gen", "er", "--n", "80", "--p", "0.2", "--seed", "4", "--out", dir / "er.txt"}).code == 0);
  REQUIRE(dcc_cli({"construct", dir / "er.txt", "--algo", "ga", "--out", dir / "er.cover"}).code == 0);
  REQUIRE(dcc_cli({"convert", dir / "er.cover", "--to", "encoded", "--out", dir / "er.bin"}).code == 0);
  for (const char* app : {"cc", "matching", "kcore", "color", "dfs"}) {
    CHECK(dcc_cli({"run", app, dir / "er.bin"}).out == dcc_cli({"run", app, dir / "er.cover"}).out);
  }
  CHECK(dcc_cli({"run", "mis", dir / "er.cover", "--format", "cover"}).code == 0);

  write_file(dir / "two.cover", "6 2 6\n1 2 3\n4 5 6\n");
  const Run ecc = dcc_cli({"run", "ecc", dir / "two.cover"});
  CHECK(ecc.code == 1);
  CHECK(ecc.err.find("disconnected") != std::string::npos);

  write_file(dir / "gap.cover", "5 1 2\n1 2\n");
  CHECK(dcc_cli({"run", "cc", dir / "gap.cover"}).err.find("vertices_outside_cover=3") != std::string::npos);

  CHECK(dcc_cli({"run", "pagerank", dir / "k3.cover"}).code == 2);
  CHECK(dcc_cli({"run", "bfs", dir / "k3.cover", "--source", "0"}).code == 2);
  CHECK(dcc_cli({"run", "bfs", dir / "k3.cover", "--source", "9"}).code == 1);
}

TEST_CASE("bench") {
  TempDir dir;
  write_file(dir / "k3.txt", kTriangleGraph);
  write_file(dir / "k3.cover", kTriangleCover);
  const Run smoke = dcc_cli({"bench", dir / "k3.txt", dir / "k3.cover", "--reps", "1"});
  REQUIRE(smoke.code == 0);
  const json report = json::parse(smoke.out);
  std::ifstream schema_file(std::string(DCC_SOURCE_DIR) + "/schemas/bench_report.schema.json");
  const json schema = json::parse(schema_file);
  std::string why;
  CHECK_MESSAGE(conforms(report, schema, why), why);
  CHECK(report["apps"].size() == 10);
  for (const auto& app : report["apps"]) {
    CHECK(app["equivalent"] == true);
    const double sum = app["read_time_s"].get<double>() + app["dual_build_time_s"].get<double>() +
                       app["compute_time_s"].get<double>();
    CHECK(app["total_time_s"].get<double>() == doctest::Approx(sum).epsilon(1e-9));
    CHECK(app["mem_units_adj"] == 2 * 3 + 3);
  }

  REQUIRE(dcc_cli({"gen", "matched-cliques", "--n", "512", "--out", dir / "mc.txt"}).code == 0);
  REQUIRE(dcc_cli({"construct", dir / "mc.txt", "--algo", "sp", "--out", dir / "mc.cover"}).code == 0);
  const Run mc = dcc_cli({"bench", dir / "mc.txt", dir / "mc.cover", "--apps", "cc,bfs", "--reps", "1"});
  REQUIRE(mc.code == 0);
  const json r = json::parse(mc.out);
  CHECK(r["constructor"] == "sp");
  CHECK(r["compression_ratio"] == 256.0);
  const auto& cc = r["apps"][0];
  CHECK(cc["app"] == "cc");
  CHECK(cc["mem_units_adj"] == 2 * (512 * 511 + 512) + 1024);
  CHECK(cc["mem_units_dcc"] == 4 * 512 + 514);
  CHECK(cc["mem_ratio"].get<double>() == doctest::Approx(525312.0 / 2562.0).epsilon(1e-12));
  const auto& bfs = r["apps"][1];
  CHECK(bfs["mem_units_dcc"] == 2 * (4 * 512 + 514) + 1024);

  const Run csv = dcc_cli({"bench", dir / "k3.txt", dir / "k3.cover", "--apps", "cc", "--reps", "2", "--format",
                           "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);

  CHECK(dcc_cli({"bench", dir / "k3.txt", dir / "k3.cover", "--apps", "nope"}).code == 2);
  write_file(dir / "p3.cover", kPathCover);
  CHECK(dcc_cli({"bench", dir / "k3.txt", dir / "p3.cover", "--reps", "1"}).code == 1);
}
