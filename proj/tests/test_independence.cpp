#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <stdexcept>
#include <vector>

#include "netrobust/graph.hpp"
#include "netrobust/independence.hpp"
#include "netrobust/runtime.hpp"
#include "netrobust/topology.hpp"
#include "testutil.hpp"

using namespace netrobust;

namespace {

void check_independent(const Graph& g, const std::vector<int>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      CHECK_FALSE(g.has_edge(set[i], set[j]));
    }
  }
}

// Sparse random graph whose clique-cover bound is weak, so the search needs
// thousands of nodes and is guaranteed to cross a deadline-check stride.
Graph hard_instance() {
  DetRng rng(1);
  std::vector<Edge> edges;
  const int n = 80;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.below(6) == 0) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("independence numbers of small graphs") {
  AlphaResult c6 = independence_number(cycle_graph(6));
  CHECK(c6.alpha == 3);
  CHECK(c6.witness.size() == 3);
  check_independent(cycle_graph(6), c6.witness);

  CHECK(independence_number(cycle_graph(5)).alpha == 2);
  CHECK(independence_number(petersen_graph()).alpha == 4);
  CHECK(independence_number(path_graph(4)).alpha == 2);
  CHECK(independence_number(star_tree(5)).alpha == 5);

  for (int n = 2; n <= 8; ++n) {
    CHECK(independence_number(complete_graph(n)).alpha == 1);
  }
}

TEST_CASE("independence numbers of desk DCell instances") {
  AlphaResult d13 = independence_number(gen_dcell(1, 3));
  CHECK(d13.alpha == 4);
  check_independent(gen_dcell(1, 3), d13.witness);

  AlphaResult d22 = independence_number(gen_dcell(2, 2));
  CHECK(d22.alpha == 19);
  CHECK(d22.witness.size() == 19);
  check_independent(gen_dcell(2, 2), d22.witness);
}

TEST_CASE("witnesses are deterministic") {
  AlphaResult a = independence_number(petersen_graph());
  AlphaResult b = independence_number(petersen_graph());
  CHECK(a.witness == b.witness);
}

TEST_CASE("node budget is enforced") {
  CHECK_THROWS_AS(independence_number(gen_dcell(2, 2), 1), CapExceeded);
}

TEST_CASE("deadline is enforced") {
  Graph g = hard_instance();
  // Sanity: solvable, large enough to pass several check strides.
  AlphaResult full = independence_number(g);
  CHECK(full.nodes > 4096);
  CHECK_THROWS_AS(independence_number(g, 10'000'000, Deadline::after_ms(0)),
                  BudgetExceeded);
}

TEST_CASE("triangle detection") {
  CHECK_FALSE(has_triangle(cycle_graph(6)));
  CHECK(has_triangle(complete_graph(3)));
  CHECK(has_triangle(complete_graph(4)));
  CHECK_FALSE(has_triangle(petersen_graph()));
  CHECK(has_triangle(gen_dcell(1, 3)));   // level-0 blocks are triangles
  CHECK_FALSE(has_triangle(gen_dcell(2, 2)));
  CHECK(has_triangle(gen_star(4, 2)));
}

TEST_CASE("rational arithmetic") {
  Rational r = make_rational(6, 4);
  CHECK(r.num == 3);
  CHECK(r.den == 2);
  CHECK(rational_text(r) == "3/2");
  CHECK(rational_text(make_rational(4, 2)) == "2");
  CHECK(rational_less(make_rational(3, 2), make_rational(2, 1)));
  CHECK_FALSE(rational_less(make_rational(2, 1), make_rational(2, 1)));
  CHECK_FALSE(rational_less(make_rational(5, 2), make_rational(2, 1)));
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("hypothesis report for DCell(2,2)") {
  Graph g = gen_dcell(2, 2);
  HypothesisReport h = hypothesis_report(g, 3);
  CHECK(h.order == 42);
  CHECK(h.r == 3);
  CHECK(h.regular);
  CHECK(h.triangle_free);
  CHECK(h.order_at_least_8);
  CHECK(h.used_exact);
  CHECK(h.alpha_value.num == 19);
  CHECK(h.alpha_value.den == 1);

  // alpha = 19: 19 < 20 and 19 < 22 hold; 19 < 19 and 19 < 18 do not.
  CHECK(h.super_matched_bound);
  CHECK(h.mp1_bound);
  CHECK_FALSE(h.cond_super_bound);
  CHECK_FALSE(h.cond_super_triangle_free_bound);
}

TEST_CASE("hypothesis report boundary case") {
  // K_4 with r = 3: alpha = 1 and (|V| - 2) / 2 = 1, so the strict
  // inequality fails exactly at the boundary.
  HypothesisReport h = hypothesis_report(complete_graph(4), 3);
  CHECK(h.regular);
  CHECK_FALSE(h.triangle_free);
  CHECK_FALSE(h.order_at_least_8);
  CHECK(h.used_exact);
  CHECK_FALSE(h.super_matched_bound);
}

TEST_CASE("hypothesis report falls back to a supplied upper bound") {
  Graph g = gen_dcell(2, 2);
  HypothesisReport h = hypothesis_report(g, 3, make_rational(20, 1), 1);
  CHECK_FALSE(h.used_exact);
  CHECK(h.alpha_value.num == 20);
  // 20 < 20 fails, 20 < 22 still holds.
  CHECK_FALSE(h.super_matched_bound);
  CHECK(h.mp1_bound);
}

TEST_CASE("hypothesis report without a fallback rethrows") {
  CHECK_THROWS_AS(hypothesis_report(gen_dcell(2, 2), 3, std::nullopt, 1), CapExceeded);
}

TEST_CASE("non-regular input is reported as such") {
  HypothesisReport h = hypothesis_report(path_graph(4), 1);
  CHECK_FALSE(h.regular);
}
