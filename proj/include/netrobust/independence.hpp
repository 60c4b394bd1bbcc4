#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/runtime.hpp"

namespace netrobust {

// Result of an exact maximum-independent-set computation.
struct AlphaResult {
  int alpha = 0;
  std::vector<int> witness;  // an independent set of size alpha, sorted
  std::uint64_t nodes = 0;   // branch-and-bound nodes expanded
};

// Exact independence number via bitset branch-and-bound with a greedy
// clique-cover upper bound. Deterministic: branches on the highest-degree
// vertex remaining (lowest index on ties), include-branch first, so the
// witness is reproducible. Throws CapExceeded once more than node_budget
// nodes are expanded, and BudgetExceeded when the deadline lapses; it never
// returns an unproven value.
AlphaResult independence_number(const Graph& g,
                                std::uint64_t node_budget = 10'000'000,
                                Deadline deadline = Deadline{});

// True when g contains a triangle.
bool has_triangle(const Graph& g);

// Exact nonnegative rational, used so hypothesis checks never round.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0
};

Rational make_rational(long long num, long long den);
std::string rational_text(const Rational& r);

// Strict comparison a < b via cross multiplication (denominators positive).
bool rational_less(const Rational& a, const Rational& b);

// Evaluation of the independence-number hypotheses used by the sufficient
// conditions for super matched / conditional matching preclusion results on
// r-regular graphs. Each flag is true only when the inequality is
// established: with an exact alpha that satisfies it, or with an upper bound
// on alpha that already satisfies it. A false flag means "not established",
// not a proof of the negation, unless alpha is exact.
struct HypothesisReport {
  int order = 0;
  int r = 0;
  bool regular = false;        // g is actually r-regular
  bool triangle_free = false;
  bool order_at_least_8 = false;

  bool used_exact = false;     // alpha_value is the exact independence number
  Rational alpha_value;        // exact alpha, or the supplied upper bound

  // alpha < (|V| - 2) / 2
  bool super_matched_bound = false;
  // alpha < (|V| - 2) / 2 - (2r - 8)
  bool mp1_bound = false;
  // alpha < min{ (|V| - 4) / 2, (|V| - 2) / 2 - (2r - 6) }
  bool cond_super_bound = false;
  // alpha < (|V| - 2) / 2 - (2r - 4)
  bool cond_super_triangle_free_bound = false;
};

// Builds the report for an r-regular graph. Computes the exact independence
// number within the given budgets; if that is infeasible and alpha_upper is
// supplied, falls back to the bound, otherwise the budget exception
// propagates. All comparisons are exact integer arithmetic.
HypothesisReport hypothesis_report(const Graph& g, int r,
                                   std::optional<Rational> alpha_upper = {},
                                   std::uint64_t node_budget = 10'000'000,
                                   Deadline deadline = Deadline{});

}  // namespace netrobust
