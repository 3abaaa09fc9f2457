#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dcc/cover.hpp"
#include "dcc/cover_io.hpp"
#include "dcc/cover_stats.hpp"
#include "dcc/degeneracy.hpp"
#include "dcc/generators.hpp"
#include "dcc/minimality.hpp"
#include "dcc/validation.hpp"
#include "oracles.hpp"
#include "random_cover.hpp"

using namespace dcc;

namespace {

CliqueCover make_cover(std::size_t n, std::vector<std::vector<Vertex>> cliques) {
  return CliqueCover(n, cliques);
}

Graph triangle() { return gen_complete(3); }

Graph path3() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  return Graph::from_edges(3, edges);
}

CoverStats stats_of(const Graph& g, const CliqueCover& c) {
  return cover_stats(g, c, degeneracy_ordering(g).coreness);
}

}  // namespace

TEST_CASE("clique cover construction") {
  CliqueCover c(5);
  const std::vector<Vertex> unsorted = {4, 0, 2};
  c.add_clique(unsorted);
  CHECK(std::vector<Vertex>(c.clique(0).begin(), c.clique(0).end()) == std::vector<Vertex>{0, 2, 4});
  CHECK(c.size() == 3);
  CHECK(c.max_clique_size() == 3);
  const std::vector<Vertex> empty, repeated = {1, 1}, out_of_range = {1, 5};
  CHECK_THROWS_AS(c.add_clique(empty), std::invalid_argument);
  CHECK_THROWS_AS(c.add_clique(repeated), std::invalid_argument);
  CHECK_THROWS_AS(c.add_clique(out_of_range), std::invalid_argument);
  CHECK(c.num_cliques() == 1);
}

TEST_CASE("dual conversions") {
  SUBCASE("small example") {
    const CliqueCover c = make_cover(5, {{0, 1, 2}, {2, 3}, {1, 3}});
    const IncidenceDual d = dual_from_cover(c);
    CHECK(d.num_labels() == 3);
    CHECK(d.size() == c.size());
    CHECK(std::vector<Label>(d.labels(1).begin(), d.labels(1).end()) == std::vector<Label>{0, 2});
    CHECK(std::vector<Label>(d.labels(3).begin(), d.labels(3).end()) == std::vector<Label>{1, 2});
    CHECK(d.labels(4).empty());
    CHECK(cover_from_dual(d) == c);
  }
  SUBCASE("random round trips") {
    SplitMix64 rng(17);
    for (int round = 0; round < 200; ++round) {
      const std::size_t n = 1 + rng.below(60);
      const CliqueCover c = testing::random_cover(n, rng.below(40), 1 + rng.below(10), rng);
      const DccRepresentation dcc = DccRepresentation::from_cover(c);
      REQUIRE(is_consistent(dcc));
      CHECK(dcc.size() == 2 * c.size());
      CHECK(cover_from_dual(dcc.dual) == c);
      CHECK(dual_from_cover(cover_from_dual(dcc.dual)) == dcc.dual);
    }
  }
  SUBCASE("inconsistent pair detected") {
    DccRepresentation dcc = DccRepresentation::from_cover(make_cover(3, {{0, 1}, {1, 2}}));
    dcc.dual = dual_from_cover(make_cover(3, {{0, 1}, {0, 2}}));
    CHECK_FALSE(is_consistent(dcc));
  }
}

TEST_CASE("adjacency and neighborhood queries agree with the graph") {
  SplitMix64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const std::size_t n = 2 + rng.below(50);
    const Graph g = gen_er(n, 0.1 + 0.8 * rng.uniform01(), rng.next());
    const DccRepresentation dcc = DccRepresentation::from_cover(testing::random_valid_cover(g, rng));
    const auto adj = oracle::adjacency_matrix(g);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) REQUIRE(adjacency_query(dcc.dual, u, v) == adj[u][v]);
      }
      const auto nb = neighborhood_query(dcc, u);
      CHECK(nb == std::vector<Vertex>(g.neighbors(u).begin(), g.neighbors(u).end()));
    }
  }
  const DccRepresentation tri = DccRepresentation::from_cover(make_cover(4, {{0, 1, 2}}));
  CHECK(neighborhood_query(tri, 0) == std::vector<Vertex>{1, 2});
  CHECK(neighborhood_query(tri, 3).empty());
  CHECK_THROWS(adjacency_query(tri.dual, 1, 1));
  CHECK_THROWS_AS(adjacency_query(tri.dual, 1, 4), std::out_of_range);
}

TEST_CASE("first common label") {
  const std::vector<Label> a = {1, 4, 9}, b = {2, 4, 9}, c = {0, 3};
  CHECK(first_common_label(a, b) == 4);
  CHECK(first_common_label(a, c) == kNoLabel);
  CHECK(first_common_label({}, a) == kNoLabel);
  // Long against short exercises the probing path.
  std::vector<Label> lng;
  for (Label l = 0; l < 400; l += 3) lng.push_back(l);
  const std::vector<Label> shrt = {100, 200, 300};
  CHECK(first_common_label(lng, shrt) == 300);
  CHECK(first_common_label(shrt, lng) == 300);
  const std::vector<Label> none = {1, 2};
  CHECK(first_common_label(lng, none) == kNoLabel);
}

TEST_CASE("cover text format") {
  SUBCASE("round trip") {
    SplitMix64 rng(3);
    const CliqueCover c = testing::random_cover(30, 25, 6, rng);
    std::stringstream s;
    write_cover(c, s);
    CHECK(read_cover(s) == c);
  }
  SUBCASE("writer output") {
    std::ostringstream s;
    write_cover(make_cover(4, {{2, 0}, {1, 2, 3}}), s);
    CHECK(s.str() == "4 2 5\n1 3\n2 3 4\n");
  }
  SUBCASE("malformed input") {
    auto fails = [](const std::string& text) {
      std::istringstream s(text);
      CHECK_THROWS_AS(read_cover(s), ParseError);
    };
    fails("3 1 2\n2 1\n");       // not ascending
    fails("3 1 2\n1 4\n");       // out of range
    fails("3 2 4\n1 2\n");       // missing clique line
    fails("3 1 2\n1 2\n2 3\n");  // extra line
    fails("3 1 3\n1 2\n");       // wrong assignment total
    fails("3 1\n1 2\n");         // short header
  }
}

TEST_CASE("validation") {
  const Graph g = path3();
  CHECK(validate_cover(g, make_cover(3, {{0, 1}, {1, 2}})).valid());
  const ValidationReport not_clique = validate_cover(g, make_cover(3, {{0, 1, 2}}));
  REQUIRE(not_clique.non_cliques.size() == 1);
  CHECK(not_clique.non_cliques[0].clique == 0);
  CHECK(not_clique.non_cliques[0].non_edge == Edge{0, 2});
  const ValidationReport missing = validate_cover(g, make_cover(3, {{0, 1}}));
  REQUIRE(missing.uncovered.size() == 1);
  CHECK(missing.uncovered[0] == Edge{1, 2});
  CHECK(missing.describe() == "1 uncovered edge(s): {2,3}");
  CHECK_THROWS_AS(validate_cover(g, make_cover(4, {{0, 1}, {1, 2}})), std::invalid_argument);

  SplitMix64 rng(8);
  for (int round = 0; round < 40; ++round) {
    const Graph r = gen_er(2 + rng.below(30), 0.5, rng.next());
    const CliqueCover c = testing::random_valid_cover(r, rng);
    CHECK(validate_cover(r, c).valid());
    CHECK(oracle::is_valid_cover(r, c));
    const auto counts = edge_coverage_counts(r, c);
    for (std::uint32_t x : counts) CHECK(x >= 1);
  }
}

TEST_CASE("minimality on small examples") {
  SUBCASE("triangle edge cover") {
    const CliqueCover edges = make_cover(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(is_inclusion_minimal(triangle(), edges).minimal);
    CHECK(is_support_minimal(triangle(), edges).minimal);
    CHECK(is_assignment_minimal(triangle(), edges).minimal);
    const MinimalityCheck comp = is_composition_minimal(triangle(), edges);
    CHECK_FALSE(comp.minimal);
    CHECK(comp.clique == 0);
    CHECK(comp.other == 1);
  }
  SUBCASE("inclusion witness") {
    const MinimalityCheck r = is_inclusion_minimal(triangle(), make_cover(3, {{0, 1}, {0, 1, 2}}));
    CHECK_FALSE(r.minimal);
    CHECK(r.clique == 0);
    CHECK(r.other == 1);
  }
  SUBCASE("support witness") {
    const MinimalityCheck r = is_support_minimal(triangle(), make_cover(3, {{0, 1, 2}, {1, 2}}));
    CHECK_FALSE(r.minimal);
    CHECK(r.clique == 1);
  }
  SUBCASE("matched cliques canonical cover is composition-minimal") {
    const Graph g = gen_matched_cliques(4);
    const CliqueCover c = oracle::matched_cliques_cover(4);
    CHECK(is_composition_minimal(g, c).minimal);
    CHECK(oracle::is_composition_minimal(g, c));
  }
  SUBCASE("support-minimal but not assignment-minimal") {
    const Graph g = gen_minimality_example();
    // abc abe acf bdg cdh with a..h = 0..7
    const CliqueCover c = make_cover(8, {{0, 1, 2}, {0, 1, 4}, {0, 2, 5}, {1, 3, 6}, {2, 3, 7}});
    CHECK(is_support_minimal(g, c).minimal);
    const MinimalityCheck r = is_assignment_minimal(g, c);
    CHECK_FALSE(r.minimal);
    CHECK(r.clique == 0);
    CHECK(r.vertex == 0);
  }
  SUBCASE("invalid cover rejected") {
    CHECK_THROWS_AS(is_composition_minimal(path3(), make_cover(3, {{0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(make_assignment_minimal(path3(), make_cover(3, {{0, 1, 2}})), std::invalid_argument);
  }
}

TEST_CASE("minimality verifiers agree with oracles on random covers") {
  SplitMix64 rng(21);
  for (int round = 0; round < 80; ++round) {
    const Graph g = gen_er(3 + rng.below(14), 0.3 + 0.5 * rng.uniform01(), rng.next());
    const CliqueCover c = testing::random_valid_cover(g, rng);
    CAPTURE(round);
    CHECK(is_composition_minimal(g, c).minimal == oracle::is_composition_minimal(g, c));
    CHECK(is_assignment_minimal(g, c).minimal == oracle::is_assignment_minimal(g, c));
    // Assignment-minimal implies support-minimal implies inclusion-minimal.
    if (is_assignment_minimal(g, c)) CHECK(is_support_minimal(g, c).minimal);
    if (is_support_minimal(g, c)) CHECK(is_inclusion_minimal(g, c).minimal);
  }
}

TEST_CASE("make_assignment_minimal") {
  const Graph ex = gen_minimality_example();
  const CliqueCover c = make_cover(8, {{0, 1, 2}, {0, 1, 4}, {0, 2, 5}, {1, 3, 6}, {2, 3, 7}});
  const CliqueCover m = make_assignment_minimal(ex, c);
  CHECK(m.size() < c.size());
  CHECK(std::vector<Vertex>(m.clique(0).begin(), m.clique(0).end()) == std::vector<Vertex>{1, 2});

  SplitMix64 rng(4);
  for (int round = 0; round < 60; ++round) {
    const Graph g = gen_er(2 + rng.below(18), 0.2 + 0.7 * rng.uniform01(), rng.next());
    const CliqueCover in = testing::random_valid_cover(g, rng);
    const CliqueCover out = make_assignment_minimal(g, in);
    CAPTURE(round);
    CHECK(oracle::is_valid_cover(g, out));
    CHECK(oracle::is_assignment_minimal(g, out));
    CHECK(is_assignment_minimal(g, out).minimal);
    CHECK(out.size() <= in.size());
    for (Label l = 0; l < out.num_cliques(); ++l) CHECK(out.clique(l).size() >= 2);
  }
}

TEST_CASE("cover statistics") {
  const Graph k4 = gen_complete(4);
  const CoverStats s4 = stats_of(k4, make_cover(4, {{0, 1, 2, 3}}));
  CHECK(s4.compression_ratio == 3.0);
  CHECK(s4.ub_opt == 3.0);
  CHECK(s4.min_assignments == 4);
  CHECK(s4.max_clique_size == 4);

  for (std::size_t n = 2; n <= 40; ++n) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    const CoverStats s = stats_of(gen_complete(n), make_cover(n, {all}));
    CHECK(s.compression_ratio == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
    CHECK(s.ub_opt == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
  }

  const CoverStats p3 = stats_of(path3(), make_cover(3, {{0, 1}, {1, 2}}));
  CHECK(p3.compression_ratio == 1.0);

  const CoverStats mc = stats_of(gen_matched_cliques(64), oracle::matched_cliques_cover(64));
  CHECK(mc.num_cliques == 66);
  CHECK(mc.assignments == 256);
  CHECK(mc.compression_ratio == 32.0);

  const CoverStats empty = stats_of(Graph::from_edges(3, {}), CliqueCover(3));
  CHECK(empty.compression_ratio == 0.0);
  CHECK(empty.ub_opt == 0.0);

  SplitMix64 rng(13);
  for (int round = 0; round < 50; ++round) {
    const Graph g = gen_er(3 + rng.below(40), 0.1 + 0.8 * rng.uniform01(), rng.next());
    const CliqueCover c = testing::random_valid_cover(g, rng);
    const CoverStats s = stats_of(g, c);
    CHECK(s.assignments >= s.min_assignments);
    CHECK(s.compression_ratio <= s.ub_opt);
  }
}
