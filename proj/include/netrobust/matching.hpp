#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/restricted.hpp"
#include "netrobust/runtime.hpp"

namespace netrobust {

// Maximum matching in a general graph (blossom contraction), as a sorted
// edge list. Deterministic: augmentation follows the fixed adjacency order.
std::vector<Edge> maximum_matching(const Graph& g);

bool has_perfect_matching(const Graph& g);

enum class PreclusionKind { Trivial, SemiTrivial, TrivialConditional, Other };

const char* preclusion_kind_name(PreclusionKind k);

struct PreclusionWitness {
  std::vector<Edge> edges;  // sorted
  PreclusionKind kind = PreclusionKind::Other;
  int anchor_vertex = -1;                        // Trivial: the vertex it saturates
  std::vector<int> anchor_block;                 // SemiTrivial: the block it cuts off
  std::array<int, 3> anchor_path{{-1, -1, -1}};  // TrivialConditional: u, v, w
};

struct PreclusionResult {
  bool defined = true;  // false: no such deletion set exists at any size
  int number = 0;
  bool exhaustive = false;  // witnesses holds every optimal set
  std::vector<PreclusionWitness> witnesses;
  std::uint64_t tested = 0;  // candidate edge sets enumerated
};

struct MatchingLimits {
  std::uint64_t max_tests = 10000000;
  std::uint64_t max_witnesses = 100000;
  Deadline deadline{};
};

// Matching preclusion number: the size of a smallest edge set whose deletion
// leaves the graph without a perfect matching (0 when the graph already has
// none; the empty set is its own witness then). With exhaustive set, every
// optimal set is collected in lexicographic order; otherwise the scan stops
// at the first optimum under the deterministic block rule. Sizes are scanned
// in increasing order, so the first size with a hit is the answer. Throws
// CapExceeded when the candidate space outgrows limits.max_tests.
PreclusionResult mp_number(const Graph& g, bool exhaustive = false,
                           const MatchingLimits& limits = {});
PreclusionResult mp_number_serial(const Graph& g, bool exhaustive = false,
                                  const MatchingLimits& limits = {});

// Conditional variant: deletion sets that leave no isolated vertex. May be
// undefined (defined == false) — e.g. a 4-cycle, where every matching-killing
// deletion isolates a vertex.
PreclusionResult mp1_number(const Graph& g, bool exhaustive = false,
                            const MatchingLimits& limits = {});
PreclusionResult mp1_number_serial(const Graph& g, bool exhaustive = false,
                                   const MatchingLimits& limits = {});

struct VeResult {
  int value = 0;
  std::array<int, 3> path{{-1, -1, -1}};  // u, v, w with edges uv and vw
  std::vector<Edge> edges;                // all edges at u and w except uv, wv
};

// Upper bound for the conditional preclusion number from 2-paths: the
// minimum over paths u-v-w of d(u) + d(w) - 2 - [uw is an edge]. Deleting
// the witness edges leaves u and w degree-1 vertices matchable only to v.
// Throws std::invalid_argument when the graph has no 2-path.
VeResult v_e(const Graph& g);

// Classifies a verified deletion set: Trivial (all edges at one vertex),
// SemiTrivial (the full boundary of one block — a level-0 block when the
// graph carries levels, otherwise a maximal clique of order >= 3),
// TrivialConditional (all edges at the ends of a 2-path except the path
// edges, leaving no isolated vertex), or Other. Validates that the set is a
// preclusion set (and leaves no isolated vertex when conditional is set).
PreclusionKind classify_preclusion_set(const Graph& g, const std::vector<Edge>& set,
                                       bool conditional);

struct MatchedStatus {
  Verdict verdict = Verdict::Unknown;
  std::string evidence;
  int number = -1;                   // the preclusion number the verdict rests on
  std::vector<Edge> counterexample;  // optimal set of the offending kind (Refuted)
};

// Proven iff every optimal preclusion set is trivial (requires a perfect
// matching); Unknown when caps or deadlines stop the exhaustive scan.
MatchedStatus super_matched_status(const Graph& g, const MatchingLimits& limits = {});

// Proven iff every optimal conditional preclusion set is trivial conditional.
MatchedStatus cond_super_matched_status(const Graph& g, const MatchingLimits& limits = {});

}  // namespace netrobust
