#pragma once

#include <cstdint>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/runtime.hpp"

namespace netrobust::oracle {

// Definition-level reference implementations. Every routine here enumerates
// the objects named by the definition it checks — edge subsets, vertex
// subsets, matchings — with no flow algorithms, no pruning heuristics and no
// code shared with the optimised library paths, so the two sides of an
// equivalence test cannot inherit the same bug. All subset scans are
// exponential; instances beyond the guard (12 vertices / 24 edges) are
// rejected with std::invalid_argument.

struct BruteLadder {
  bool defined = false;  // some k-restricted edge-cut exists
  int value = 0;         // minimum size of one, when defined
};

// Minimum size of an edge set whose removal disconnects g with every
// component of order >= k, by scanning all edge subsets in ascending size.
BruteLadder brute_lambda_k(const Graph& g, int k);

struct BruteSuper {
  bool defined = false;  // lambda_k exists
  bool super = false;    // every minimum k-restricted cut isolates an
                         // order-k component
};

BruteSuper brute_super_lambda_k(const Graph& g, int k);

// Deleting any <= m edges leaves at most q vertices outside the largest
// remaining component; scans every subset of every size up to min(m, |E|).
bool brute_super_edge_connected(const Graph& g, int m, int q);

// Perfect matching existence / maximum matching size by vertex-by-vertex
// backtracking. banned edge indices (sorted or not) are treated as deleted.
bool brute_has_perfect_matching(const Graph& g, const std::vector<int>& banned = {});
int brute_max_matching(const Graph& g);

struct BrutePreclusion {
  bool defined = false;
  int number = 0;
  // Every optimal preclusion set, each sorted, in lexicographic order.
  std::vector<std::vector<Edge>> optimal_sets;
};

// Matching preclusion (conditional = true adds the no-isolated-vertex
// restriction on the leftover graph) by scanning all edge subsets in
// ascending size and testing perfect-matching existence on each remainder.
BrutePreclusion brute_preclusion(const Graph& g, bool conditional);

// Maximum independent set size over all vertex subsets.
int brute_independence_number(const Graph& g);

// Random connected graph on 4..9 vertices: a random attachment tree plus up
// to six extra random edges. Consumes the generator deterministically.
Graph random_connected_graph(DetRng& rng);

// The fixed random-graph corpus used by equivalence tests.
std::vector<Graph> standard_corpus(std::uint32_t seed = 20190402, int count = 200);

}  // namespace netrobust::oracle
