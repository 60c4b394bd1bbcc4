#pragma once

#include <climits>
#include <vector>

#include "netrobust/graph.hpp"

namespace netrobust {

// An edge cut together with enough context to re-check it independently:
// the crossing edges, the source-side vertex set, and the component orders
// of g minus the cut (descending).
struct CutWitness {
  std::vector<Edge> cut_edges;
  std::vector<int> side;
  std::vector<int> component_sizes;
};

// Result of a bounded minimum-cut computation. When pruned is true the
// search stopped as soon as the flow reached upper_bound: the exact value is
// known only to be >= value (== the bound) and no witness is attached.
struct MinCutResult {
  bool pruned = false;
  int value = 0;
  CutWitness witness;
};

// Minimum edge cut separating every vertex of a from every vertex of b,
// computed by max-flow with a and b contracted into a super-source and
// super-sink. a and b must be nonempty and disjoint. Cuts of size >=
// upper_bound are not explored further (pruned result). The witness cut is
// the one determined by the fixed augmentation order and the residual
// source side; it is validated (crossing-edge count == value) before return.
MinCutResult min_cut_between(const Graph& g, const std::vector<int>& a,
                             const std::vector<int>& b, int upper_bound = INT_MAX);

struct ConnectivityResult {
  int value = 0;
  CutWitness witness;
};

// Global edge connectivity: min over t != 0 of the 0-t minimum cut, 0 for
// graphs that are already disconnected (empty witness cut), 0 for graphs
// with fewer than two vertices. Ties between minimum cuts are broken by the
// lexicographically smallest sorted cut-edge list among the per-target cuts.
ConnectivityResult edge_connectivity(const Graph& g);

namespace detail {

// Reusable Dinic solver for repeated pair queries against one graph. Not
// thread-safe; sweeps keep one instance per worker.
class PairCutEngine {
 public:
  explicit PairCutEngine(const Graph& g);

  // Minimum a-b cut value, stopping at upper_bound (pruned). When
  // want_witness is set and the result is exact, fills the full witness.
  MinCutResult run(const std::vector<int>& a, const std::vector<int>& b, int upper_bound,
                   bool want_witness);

 private:
  bool bfs_();
  int dfs_(int v, int budget);

  const Graph* g_;
  int nodes_ = 0;
  std::vector<int> node_of_;  // vertex -> contracted node id
  std::vector<int> first_, next_, to_;
  std::vector<signed char> cap_;
  std::vector<int> level_, iter_, queue_;
};

}  // namespace detail

}  // namespace netrobust
