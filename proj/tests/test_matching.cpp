#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/matching.hpp"
#include "netrobust/topology.hpp"
#include "testutil.hpp"

using namespace netrobust;

namespace {

// Validates that m is a matching in g (disjoint endpoints, real edges).
void check_matching(const Graph& g, const std::vector<Edge>& m) {
  std::set<int> used;
  for (const Edge& e : m) {
    CHECK(g.has_edge(e.u, e.v));
    CHECK(used.insert(e.u).second);
    CHECK(used.insert(e.v).second);
  }
}

Graph without_edges(const Graph& g, const std::vector<Edge>& removed) {
  std::set<std::pair<int, int>> gone;
  for (const Edge& e : removed) gone.insert({e.u, e.v});
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (!gone.count({e.u, e.v})) kept.push_back(e);
  }
  return Graph(g.vertex_count(), kept);
}

std::map<PreclusionKind, int> kind_counts(const PreclusionResult& r) {
  std::map<PreclusionKind, int> counts;
  for (const PreclusionWitness& w : r.witnesses) ++counts[w.kind];
  return counts;
}

}  // namespace

TEST_CASE("maximum matching sizes") {
  check_matching(cycle_graph(6), maximum_matching(cycle_graph(6)));
  CHECK(maximum_matching(cycle_graph(6)).size() == 3);
  CHECK(maximum_matching(cycle_graph(4)).size() == 2);
  CHECK(maximum_matching(cycle_graph(5)).size() == 2);
  CHECK(maximum_matching(path_graph(4)).size() == 2);
  CHECK(maximum_matching(path_graph(3)).size() == 1);
  CHECK(maximum_matching(petersen_graph()).size() == 5);
  CHECK(maximum_matching(complete_graph(6)).size() == 3);
  CHECK(maximum_matching(star_tree(5)).size() == 1);
  check_matching(petersen_graph(), maximum_matching(petersen_graph()));
}

TEST_CASE("perfect matching detection") {
  CHECK(has_perfect_matching(cycle_graph(6)));
  CHECK(has_perfect_matching(petersen_graph()));
  CHECK(has_perfect_matching(complete_graph(4)));
  CHECK_FALSE(has_perfect_matching(path_graph(3)));
  CHECK_FALSE(has_perfect_matching(cycle_graph(5)));
  CHECK_FALSE(has_perfect_matching(star_tree(3)));
  CHECK(has_perfect_matching(gen_dcell(2, 2)));
}

TEST_CASE("matching preclusion numbers on small graphs") {
  PreclusionResult c6 = mp_number(cycle_graph(6));
  CHECK(c6.defined);
  CHECK(c6.number == 2);

  PreclusionResult k4 = mp_number(complete_graph(4));
  CHECK(k4.number == 3);

  // A graph with no perfect matching has preclusion number 0.
  PreclusionResult p3 = mp_number(path_graph(3));
  CHECK(p3.defined);
  CHECK(p3.number == 0);
}

TEST_CASE("every reported optimal set is a verified preclusion set") {
  Graph g = gen_dcell(1, 3);
  PreclusionResult r = mp_number(g, true);
  CHECK(r.defined);
  CHECK(r.number == 3);
  CHECK(r.exhaustive);
  for (const PreclusionWitness& w : r.witnesses) {
    CHECK(static_cast<int>(w.edges.size()) == r.number);
    CHECK_FALSE(has_perfect_matching(without_edges(g, w.edges)));
    CHECK(classify_preclusion_set(g, w.edges, false) == w.kind);
  }
}

TEST_CASE("optimal preclusion sets of DCell(1,3) fall into three kinds") {
  // 12 trivial (one per vertex), 4 semi-trivial (triangle boundaries), and
  // 12 built from a 2-path across a level-1 edge. The last family shows the
  // boundary case n = 3: its sets are neither trivial nor semi-trivial yet
  // still optimal.
  PreclusionResult r = mp_number(gen_dcell(1, 3), true);
  REQUIRE(r.exhaustive);
  CHECK(r.witnesses.size() == 28);
  auto counts = kind_counts(r);
  CHECK(counts[PreclusionKind::Trivial] == 12);
  CHECK(counts[PreclusionKind::SemiTrivial] == 4);
  CHECK(counts[PreclusionKind::TrivialConditional] == 12);
  CHECK(counts[PreclusionKind::Other] == 0);
}

TEST_CASE("optimal preclusion sets of DCell(1,4) are all trivial") {
  PreclusionResult r = mp_number(gen_dcell(1, 4), true);
  REQUIRE(r.defined);
  CHECK(r.number == 4);
  REQUIRE(r.exhaustive);
  CHECK(r.witnesses.size() == 20);
  auto counts = kind_counts(r);
  CHECK(counts[PreclusionKind::Trivial] == 20);
}

TEST_CASE("optimal preclusion sets of DCell(2,2) are all trivial") {
  PreclusionResult r = mp_number(gen_dcell(2, 2), true);
  REQUIRE(r.defined);
  CHECK(r.number == 3);
  REQUIRE(r.exhaustive);
  CHECK(r.witnesses.size() == 42);
  auto counts = kind_counts(r);
  CHECK(counts[PreclusionKind::Trivial] == 42);
  for (const PreclusionWitness& w : r.witnesses) CHECK(w.anchor_vertex >= 0);
}

TEST_CASE("conditional preclusion") {
  PreclusionResult c6 = mp1_number(cycle_graph(6), true);
  CHECK(c6.defined);
  CHECK(c6.number == 2);
  CHECK(c6.witnesses.size() == 3);  // opposite edge pairs
  for (const PreclusionWitness& w : c6.witnesses) {
    CHECK(w.kind == PreclusionKind::TrivialConditional);
    Graph rest = without_edges(cycle_graph(6), w.edges);
    CHECK_FALSE(has_perfect_matching(rest));
    for (int v = 0; v < rest.vertex_count(); ++v) CHECK(rest.degree(v) >= 1);
  }

  // C_4: every matching-killing deletion isolates a vertex.
  PreclusionResult c4 = mp1_number(cycle_graph(4), true);
  CHECK_FALSE(c4.defined);
}

TEST_CASE("conditional preclusion of DCell(2,2)") {
  PreclusionResult r = mp1_number(gen_dcell(2, 2), true);
  REQUIRE(r.defined);
  CHECK(r.number == 4);
  REQUIRE(r.exhaustive);
  auto counts = kind_counts(r);
  CHECK(counts[PreclusionKind::TrivialConditional] == 126);
  CHECK(counts[PreclusionKind::Other] == 24);
  CHECK(r.witnesses.size() == 150);
}

TEST_CASE("v_e two-path bound") {
  VeResult c6 = v_e(cycle_graph(6));
  CHECK(c6.value == 2);
  CHECK(static_cast<int>(c6.edges.size()) == c6.value);

  VeResult k4 = v_e(complete_graph(4));
  CHECK(k4.value == 3);  // 3 + 3 - 2 - 1: the path ends are themselves adjacent

  VeResult d13 = v_e(gen_dcell(1, 3));
  CHECK(d13.value == 3);

  VeResult d22 = v_e(gen_dcell(2, 2));
  CHECK(d22.value == 4);

  // No 2-path: a single edge.
  CHECK_THROWS_AS(v_e(Graph(2, {{0, 1}})), std::invalid_argument);
}

TEST_CASE("v_e dominates the conditional preclusion number") {
  std::vector<Graph> graphs;
  graphs.push_back(cycle_graph(6));
  graphs.push_back(complete_graph(4));
  graphs.push_back(complete_graph(6));
  graphs.push_back(gen_dcell(1, 3));
  graphs.push_back(gen_dcell(2, 2));
  for (const Graph& g : graphs) {
    PreclusionResult r = mp1_number(g);
    if (r.defined) CHECK(r.number <= v_e(g).value);
  }
}

TEST_CASE("classification of hand-built deletion sets") {
  Graph d13 = gen_dcell(1, 3);
  // All edges at vertex 0: trivial.
  std::vector<Edge> star_set;
  for (int u : d13.neighbors(0)) star_set.push_back({0, u});
  CHECK(classify_preclusion_set(d13, star_set, false) == PreclusionKind::Trivial);

  // The three level-1 edges leaving block 0 cut off a triangle: semi-trivial.
  std::vector<Edge> block_boundary = {{0, 3}, {1, 6}, {2, 9}};
  CHECK(classify_preclusion_set(d13, block_boundary, false) == PreclusionKind::SemiTrivial);

  // Deleting {05, 23} strands the ends of the path 0-1-2: trivial conditional.
  std::vector<Edge> path_set = {{0, 5}, {2, 3}};
  CHECK(classify_preclusion_set(cycle_graph(6), path_set, true) ==
        PreclusionKind::TrivialConditional);

  // Not a preclusion set at all: rejected.
  CHECK_THROWS_AS(classify_preclusion_set(cycle_graph(6), {{0, 1}}, false),
                  std::invalid_argument);
}

TEST_CASE("parallel and serial preclusion scans agree") {
  std::vector<Graph> graphs;
  graphs.push_back(cycle_graph(6));
  graphs.push_back(complete_graph(4));
  graphs.push_back(gen_dcell(1, 3));
  graphs.push_back(gen_dcell(2, 2));
  for (const Graph& g : graphs) {
    PreclusionResult p = mp_number(g, true);
    PreclusionResult s = mp_number_serial(g, true);
    CHECK(p.defined == s.defined);
    CHECK(p.number == s.number);
    REQUIRE(p.witnesses.size() == s.witnesses.size());
    for (std::size_t i = 0; i < p.witnesses.size(); ++i) {
      CHECK(p.witnesses[i].edges == s.witnesses[i].edges);
      CHECK(p.witnesses[i].kind == s.witnesses[i].kind);
    }

    PreclusionResult pc = mp1_number(g, true);
    PreclusionResult sc = mp1_number_serial(g, true);
    CHECK(pc.defined == sc.defined);
    if (pc.defined) {
      CHECK(pc.number == sc.number);
      CHECK(pc.witnesses.size() == sc.witnesses.size());
    }
  }
}

TEST_CASE("super matched classification") {
  MatchedStatus d14 = super_matched_status(gen_dcell(1, 4));
  CHECK(d14.verdict == Verdict::Proven);
  CHECK(d14.number == 4);

  MatchedStatus d13 = super_matched_status(gen_dcell(1, 3));
  CHECK(d13.verdict == Verdict::Refuted);
  CHECK_FALSE(d13.counterexample.empty());
  CHECK(classify_preclusion_set(gen_dcell(1, 3), d13.counterexample, false) !=
        PreclusionKind::Trivial);

  MatchedStatus d22 = super_matched_status(gen_dcell(2, 2));
  CHECK(d22.verdict == Verdict::Proven);
  CHECK(d22.number == 3);

  // C_6: the opposite-edge pairs are non-trivial optimal sets.
  MatchedStatus c6 = super_matched_status(cycle_graph(6));
  CHECK(c6.verdict == Verdict::Refuted);
}

TEST_CASE("conditionally super matched classification") {
  MatchedStatus d22 = cond_super_matched_status(gen_dcell(2, 2));
  CHECK(d22.verdict == Verdict::Refuted);
  CHECK(d22.number == 4);
  CHECK_FALSE(d22.counterexample.empty());
  CHECK(classify_preclusion_set(gen_dcell(2, 2), d22.counterexample, true) ==
        PreclusionKind::Other);

  MatchedStatus c6 = cond_super_matched_status(cycle_graph(6));
  CHECK(c6.verdict == Verdict::Proven);
  CHECK(c6.number == 2);
}

TEST_CASE("graphs without a perfect matching") {
  // The empty deletion already precludes, so the number is 0 ...
  PreclusionResult odd = mp_number(cycle_graph(5));
  CHECK(odd.defined);
  CHECK(odd.number == 0);
  // ... but the super-matched question is rejected outright.
  CHECK_THROWS_AS(super_matched_status(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("tiny test caps raise CapExceeded") {
  MatchingLimits limits;
  limits.max_tests = 1;
  CHECK_THROWS_AS(mp_number(gen_dcell(2, 2), true, limits), CapExceeded);
}
