#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <climits>
#include <set>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/mincut.hpp"
#include "netrobust/topology.hpp"
#include "testutil.hpp"

using namespace netrobust;

namespace {

// Independent witness check: the reported cut must have exactly `value`
// edges, all present in g, and deleting them must disconnect the reported
// side from the rest (unless the cut is empty because g was disconnected).
void check_cut_witness(const Graph& g, const ConnectivityResult& r) {
  CHECK(static_cast<int>(r.witness.cut_edges.size()) == r.value);
  std::set<std::pair<int, int>> cut;
  for (const Edge& e : r.witness.cut_edges) {
    CHECK(g.has_edge(e.u, e.v));
    cut.insert({e.u, e.v});
  }
  CHECK(cut.size() == r.witness.cut_edges.size());
  if (r.value == 0) return;

  std::vector<char> in_side(g.vertex_count(), 0);
  for (int v : r.witness.side) in_side[v] = 1;
  int side_size = static_cast<int>(r.witness.side.size());
  CHECK(side_size > 0);
  CHECK(side_size < g.vertex_count());

  int crossing = 0;
  for (const Edge& e : g.edges()) {
    if (in_side[e.u] != in_side[e.v]) {
      ++crossing;
      CHECK(cut.count({e.u, e.v}) == 1);
    }
  }
  CHECK(crossing == r.value);

  // Component sizes of g minus the cut, descending.
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!cut.count({e.u, e.v})) kept.push_back(e);
  }
  Graph h(g.vertex_count(), kept);
  std::vector<std::vector<int>> comps = components(h);
  std::vector<int> sizes;
  for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  CHECK(sizes == r.witness.component_sizes);
  CHECK(comps.size() >= 2);
}

}  // namespace

TEST_CASE("edge connectivity of a cycle is 2 with a valid witness") {
  Graph g = cycle_graph(6);
  ConnectivityResult r = edge_connectivity(g);
  CHECK(r.value == 2);
  check_cut_witness(g, r);
}

TEST_CASE("edge connectivity of complete graphs is n - 1") {
  for (int n = 2; n <= 6; ++n) {
    Graph g = complete_graph(n);
    ConnectivityResult r = edge_connectivity(g);
    CHECK(r.value == n - 1);
    check_cut_witness(g, r);
  }
}

TEST_CASE("edge connectivity of a path is 1") {
  Graph g = path_graph(4);
  ConnectivityResult r = edge_connectivity(g);
  CHECK(r.value == 1);
  check_cut_witness(g, r);
}

TEST_CASE("edge connectivity of the Petersen graph is 3") {
  Graph g = petersen_graph();
  ConnectivityResult r = edge_connectivity(g);
  CHECK(r.value == 3);
  check_cut_witness(g, r);
}

TEST_CASE("disconnected input reports 0 with an empty cut") {
  Graph g(4, {{0, 1}, {2, 3}});
  ConnectivityResult r = edge_connectivity(g);
  CHECK(r.value == 0);
  CHECK(r.witness.cut_edges.empty());
}

TEST_CASE("single-vertex and empty-ish graphs") {
  Graph g(1, {});
  CHECK(edge_connectivity(g).value == 0);
}

TEST_CASE("min cut between vertex sets on a cycle") {
  Graph g = cycle_graph(6);
  MinCutResult r = min_cut_between(g, {0, 1}, {3, 4});
  CHECK_FALSE(r.pruned);
  CHECK(r.value == 2);
  CHECK(r.witness.cut_edges.size() == 2);
}

TEST_CASE("min cut between single vertices in a complete graph") {
  Graph g = complete_graph(4);
  MinCutResult r = min_cut_between(g, {0}, {1});
  CHECK_FALSE(r.pruned);
  CHECK(r.value == 3);
}

TEST_CASE("upper bound prunes the search") {
  Graph g = complete_graph(4);
  MinCutResult r = min_cut_between(g, {0}, {1}, 2);
  CHECK(r.pruned);
  CHECK(r.value == 2);
  CHECK(r.witness.cut_edges.empty());
}

TEST_CASE("pair cut engine matches one-shot queries") {
  Graph g = petersen_graph();
  detail::PairCutEngine engine(g);
  for (int t = 1; t < g.vertex_count(); ++t) {
    MinCutResult a = engine.run({0}, {t}, INT_MAX, true);
    MinCutResult b = min_cut_between(g, {0}, {t});
    CHECK(a.value == b.value);
    CHECK_FALSE(a.pruned);
  }
}

TEST_CASE("connectivity of small DCell instances matches the degree") {
  // Both instances are maximally edge-connected: lambda = n + k - 1.
  Graph d13 = gen_dcell(1, 3);
  ConnectivityResult r13 = edge_connectivity(d13);
  CHECK(r13.value == 3);
  check_cut_witness(d13, r13);

  Graph d22 = gen_dcell(2, 2);
  ConnectivityResult r22 = edge_connectivity(d22);
  CHECK(r22.value == 3);
  check_cut_witness(d22, r22);
}

TEST_CASE("cycle witness ties break to the lexicographically smallest cut") {
  // Every 0-t cut in C_6 has value 2; the reported one must be reproducible.
  Graph g = cycle_graph(6);
  ConnectivityResult a = edge_connectivity(g);
  ConnectivityResult b = edge_connectivity(g);
  CHECK(a.witness.cut_edges == b.witness.cut_edges);
  CHECK(a.witness.side == b.witness.side);
}
