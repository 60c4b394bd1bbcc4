#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "netrobust/graph.hpp"
#include "netrobust/runtime.hpp"
#include "netrobust/topology.hpp"
#include "testutil.hpp"

using namespace netrobust;

TEST_CASE("dcell_order recurrence") {
  CHECK(dcell_order(0, 4) == 4);
  CHECK(dcell_order(1, 2) == 6);
  CHECK(dcell_order(2, 2) == 42);
  CHECK(dcell_order(1, 3) == 12);
  CHECK(dcell_order(2, 3) == 156);
  CHECK(dcell_order(3, 2) == 1806);
  CHECK(dcell_order(3, 3) == 24492);
}

TEST_CASE("dcell_uid") {
  CHECK(dcell_uid({1, 1}, 2) == 3);     // 1 + 1*t_{0,2}
  CHECK(dcell_uid({0, 0, 0}, 2) == 0);
  CHECK(dcell_uid({2, 1, 0}, 2) == 14);  // 0 + 1*2 + 2*6
}

namespace {

// Per-vertex count of incident edges at each level.
std::vector<std::map<int, int>> level_profile(const Graph& g) {
  std::vector<std::map<int, int>> prof(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const int level = g.levels()[i];
    ++prof[static_cast<std::size_t>(e.u)][level];
    ++prof[static_cast<std::size_t>(e.v)][level];
  }
  return prof;
}

}  // namespace

TEST_CASE("gen_dcell structure at desk scale") {
  for (auto [k, n] : {std::pair{1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 2}}) {
    CAPTURE(k);
    CAPTURE(n);
    Graph g = gen_dcell(k, n);
    CHECK(BigInt(g.vertex_count()) == dcell_order(k, n));
    StatsRecord st = basic_stats(g);
    CHECK(st.is_regular);
    CHECK(st.regular_degree == n + k - 1);
    CHECK(components(g).size() == 1);
    REQUIRE(g.has_levels());
    for (const auto& prof : level_profile(g)) {
      CHECK(prof.at(0) == n - 1);
      for (int level = 1; level <= k; ++level) CHECK(prof.at(level) == 1);
    }
  }
}

TEST_CASE("D_{1,2} is a 6-cycle") {
  Graph g = gen_dcell(1, 2);
  StatsRecord st = basic_stats(g);
  CHECK(g.vertex_count() == 6);
  CHECK(st.is_regular);
  CHECK(st.regular_degree == 2);
  CHECK(components(g).size() == 1);
}

TEST_CASE("common-neighbor rule for DCell edges") {
  for (auto [k, n] : {std::pair{1, 3}, {2, 2}, {2, 3}}) {
    CAPTURE(k);
    CAPTURE(n);
    Graph g = gen_dcell(k, n);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      const int expected = g.levels()[i] == 0 ? n - 2 : 0;
      CHECK(common_neighbor_count(g, e.u, e.v) == expected);
    }
  }
}

TEST_CASE("gen_dcell labels carry the digit tuple") {
  Graph g = gen_dcell(1, 2);
  REQUIRE(g.has_labels());
  CHECK(g.labels()[0] == "0,0");
  CHECK(g.labels()[5] == "2,1");
}

TEST_CASE("vertex cap rejects over-size instances") {
  CHECK_THROWS_AS(gen_dcell(3, 2, 1000), CapExceeded);
  CHECK_THROWS_AS(gen_star(8, 5, 1000), CapExceeded);
}

TEST_CASE("gen_star structure") {
  Graph s = gen_star(4, 2);
  CHECK(s.vertex_count() == 12);
  StatsRecord st = basic_stats(s);
  CHECK(st.is_regular);
  CHECK(st.regular_degree == 3);
  CHECK(components(s).size() == 1);
  REQUIRE(s.has_labels());

  // S_{n,2} is n disjoint copies of K_{n-1} joined by a perfect matching
  // between blocks: vertices sharing the second symbol form cliques.
  for (int u = 0; u < s.vertex_count(); ++u)
    for (int v = u + 1; v < s.vertex_count(); ++v)
      if (s.labels()[u][1] == s.labels()[v][1]) CHECK(s.has_edge(u, v));

  Graph c6 = gen_star(3, 2);
  StatsRecord c6st = basic_stats(c6);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6st.regular_degree == 2);
  CHECK(components(c6).size() == 1);
}

TEST_CASE("complete_graph") {
  Graph k4 = complete_graph(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(basic_stats(k4).regular_degree == 3);
}

TEST_CASE("dcell_star_map is an isomorphism for n = 2..6") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    Graph d = gen_dcell(1, n);
    Graph s = gen_star(n + 1, 2);
    VertexMap map = dcell_star_map(n);
    CHECK(check_adjacency_preserving(d, s, map));
  }
}

TEST_CASE("dcell_star_map hand values for n = 2") {
  Graph s = gen_star(3, 2);
  VertexMap map = dcell_star_map(2);
  Graph d = gen_dcell(1, 2);
  REQUIRE(d.labels()[0] == "0,0");   // (a_1, a_0) = (0, 0)
  CHECK(s.labels()[map.forward[0]] == "21");
  REQUIRE(d.labels()[3] == "1,1");   // (a_1, a_0) = (1, 1)
  CHECK(s.labels()[map.forward[3]] == "32");
}

TEST_CASE("a scrambled bijection is rejected") {
  Graph d = gen_dcell(1, 2);
  Graph s = gen_star(3, 2);
  VertexMap map = dcell_star_map(2);
  std::swap(map.forward[0], map.forward[1]);
  // Swapping two images of adjacent vertices in a cycle breaks adjacency.
  CHECK(!check_adjacency_preserving(d, s, map));
}
