#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/mincut.hpp"
#include "netrobust/runtime.hpp"

namespace netrobust {

enum class Verdict { Proven, Refuted, Unknown };

const char* verdict_name(Verdict v);

// All connected vertex sets of size exactly k, each sorted ascending, in a
// fixed enumeration order (ascending anchor vertex). Throws CapExceeded if
// more than cap sets exist.
std::vector<std::vector<int>> connected_subsets(const Graph& g, int k,
                                                std::int64_t cap = 200000);

struct XiResult {
  int value = 0;
  std::vector<int> witness;  // a connected k-set attaining the boundary minimum
};

// Minimum boundary size over connected k-sets (xi_k). Requires a connected
// graph and 1 <= k <= |V|.
XiResult xi_k(const Graph& g, int k, std::int64_t cap = 200000);

struct SweepLimits {
  std::int64_t max_subsets = 200000;
  std::int64_t max_pairs = 20000000;
  Deadline deadline{};
};

struct LadderResult {
  int k = 1;
  bool defined = false;  // false: no k-restricted edge cut exists
  int value = 0;
  CutWitness witness;
  std::int64_t pairs_swept = 0;
};

// k-restricted edge connectivity: the size of a smallest edge cut whose
// removal disconnects the graph with every component keeping >= k vertices.
// Computed as the minimum cut over all pairs of disjoint connected k-sets
// (a minimum cut between two such sets leaves exactly two components, each
// containing one of the sets, so it is k-restricted automatically; and any
// optimal k-restricted cut separates two such sets). defined == false iff
// no disjoint pair of connected k-sets exists. Requires a connected graph.
LadderResult lambda_k(const Graph& g, int k, const SweepLimits& limits = {});

// Single-threaded reference sweep; produces identical results to lambda_k.
LadderResult lambda_k_serial(const Graph& g, int k, const SweepLimits& limits = {});

struct SuperStatus {
  Verdict verdict = Verdict::Unknown;
  std::string evidence;
  CutWitness counterexample;  // populated when verdict == Refuted
};

// Super-lambda_k: every minimum k-restricted cut isolates one component of
// order exactly k. Equivalent ladder form used here: the graph is
// super-lambda_k iff lambda_{k+1} is undefined or lambda_{k+1} > lambda_k
// (a minimum k-restricted cut with all components of order > k would be a
// (k+1)-restricted cut of the same size, and conversely). The scan stops at
// the first (k+1)-level cut of size <= lambda_k, which is a counterexample.
// Returns Unknown when enumeration caps or the deadline cut the scan short.
SuperStatus classify_super_lambda_k(const Graph& g, int k, const SweepLimits& limits = {});

enum class SuperOrderMode { Auto, Exhaustive, SubsetSweep };

struct SuperOrderLimits {
  std::uint64_t exhaustive_cap = 10000000;  // max edge subsets for Exhaustive mode
  int sweep_extra = 4;                      // SubsetSweep small-side bound: q + sweep_extra
  std::uint64_t sweep_cap = 10000000;       // max enumeration nodes for SubsetSweep
  Deadline deadline{};
};

// Super edge connectivity of order q with edge budget m: after deleting any
// set of at most m edges, all components other than a largest one hold at
// most q vertices in total. Exhaustive mode scans every deletion of exactly
// min(m, |E|) edges (enough: deleting extra edges never shrinks the damage,
// so a failing smaller set extends to a failing set of that size).
// SubsetSweep mode enumerates collections of disjoint connected sets with
// total order <= min(q + sweep_extra, |V| - 1) and deletes the union of
// their boundaries; any failing deletion is reproduced by the collection of
// non-largest components it creates, so the sweep is exact when the bound
// reaches |V| - 1 and otherwise can only Refute or return Unknown.
SuperStatus check_super_edge_connected(const Graph& g, int m, int q,
                                       SuperOrderMode mode = SuperOrderMode::Auto,
                                       const SuperOrderLimits& limits = {});

}  // namespace netrobust
