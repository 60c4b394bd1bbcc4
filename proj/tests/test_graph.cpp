#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "netrobust/graph.hpp"
#include "testutil.hpp"

using namespace netrobust;

TEST_CASE("edges are normalized and queryable") {
  Graph g(4, {{1, 0}, {2, 1}, {3, 0}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});  // sorted, endpoints normalized u < v
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(1, 3));
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});
  CHECK(g.edge_index(1, 2) >= 0);
  CHECK(g.edge_index(2, 3) == -1);
}

TEST_CASE("constructor rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);           // self-loop
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);           // out of range
}

TEST_CASE("parse_graph reads the documented format") {
  Graph g = parse_graph("p 3 3\ne 0 1 0\ne 1 2 1\ne 0 2 0\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_levels());  // a nonzero tag appears
  // Levels follow the sorted edge order (01, 02, 12).
  CHECK(g.levels() == std::vector<int>{0, 0, 1});

  // All-zero tags are the default and do not count as levelled input.
  CHECK(!parse_graph("p 2 1\ne 0 1 0\n").has_levels());

  Graph labeled = parse_graph("# comment\np 2 1\nv 0 a\nv 1 b\ne 0 1\n");
  CHECK(labeled.has_labels());
  CHECK(labeled.labels()[0] == "a");
  CHECK(!labeled.has_levels());

  Graph empty = parse_graph("p 0 0\n");
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("parse_graph reports the offending line") {
  try {
    parse_graph("p 2 1\ne 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);      // edge before header
  CHECK_THROWS_AS(parse_graph("p 2 2\ne 0 1\n"), ParseError);  // count mismatch
}

TEST_CASE("write_graph round-trips") {
  Graph g(4, {{0, 1}, {0, 2}, {1, 3}}, {0, 1, 1}, {"a", "b", "c", "d"});
  std::string text = write_graph(g);
  Graph back = parse_graph(text);
  CHECK(back == g);
  CHECK(write_graph(back) == text);
}

TEST_CASE("components are ordered largest first, ties by smallest vertex") {
  Graph g(7, {{0, 1}, {2, 3}, {4, 5}, {5, 6}});
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{4, 5, 6});
  CHECK(comps[1] == std::vector<int>{0, 1});  // size tie with {2,3}: smaller vertex first
  CHECK(comps[2] == std::vector<int>{2, 3});

  Graph two(4, {{0, 1}, {2, 3}});
  CHECK(components(two).size() == 2);
}

TEST_CASE("basic_stats") {
  StatsRecord k3 = basic_stats(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(k3.is_regular);
  CHECK(k3.regular_degree == 2);
  CHECK(!k3.triangle_free);

  StatsRecord c6 = basic_stats(cycle_graph(6));
  CHECK(c6.is_regular);
  CHECK(c6.regular_degree == 2);
  CHECK(c6.triangle_free);

  StatsRecord p3 = basic_stats(path_graph(3));
  CHECK(!p3.is_regular);
  CHECK(p3.min_degree == 1);
  CHECK(p3.max_degree == 2);
}

TEST_CASE("common_neighbor_count") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(common_neighbor_count(k4, 0, 1) == 2);
  CHECK(common_neighbor_count(cycle_graph(6), 0, 1) == 0);
  CHECK(common_neighbor_count(cycle_graph(6), 0, 2) == 1);
}
