#include "netrobust/independence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netrobust {

namespace {

constexpr std::uint64_t kDeadlineStride = 4096;

struct MisSolver {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> adj;  // n * words
  std::uint64_t node_budget = 0;
  Deadline deadline;
  std::uint64_t nodes = 0;
  int best = 0;
  std::vector<int> best_set;
  std::vector<int> stack;
  // Scratch clique masks for the greedy clique-cover bound.
  std::vector<std::uint64_t> cliques;

  const std::uint64_t* row(int v) const {
    return adj.data() + static_cast<std::size_t>(v) * words;
  }

  static bool test_bit(const std::uint64_t* m, int v) {
    return (m[v >> 6] >> (v & 63)) & 1ULL;
  }
  static void set_bit(std::uint64_t* m, int v) { m[v >> 6] |= 1ULL << (v & 63); }
  static void clear_bit(std::uint64_t* m, int v) {
    m[v >> 6] &= ~(1ULL << (v & 63));
  }

  int popcount(const std::uint64_t* m) const {
    int c = 0;
    for (int w = 0; w < words; ++w) c += __builtin_popcountll(m[w]);
    return c;
  }

  bool subset_of(const std::uint64_t* a, const std::uint64_t* b) const {
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  // Greedy clique cover of the graph induced on the candidate set: the number
  // of cliques bounds the independence number of the remainder from above.
  int cover_bound(const std::uint64_t* cand) {
    int count = 0;
    cliques.assign(cliques.size(), 0);
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int v = (w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        const std::uint64_t* av = row(v);
        bool placed = false;
        for (int c = 0; c < count; ++c) {
          std::uint64_t* cm = cliques.data() + static_cast<std::size_t>(c) * words;
          if (subset_of(cm, av)) {
            set_bit(cm, v);
            placed = true;
            break;
          }
        }
        if (!placed) {
          if ((count + 1) * static_cast<std::size_t>(words) > cliques.size())
            cliques.resize((count + 1) * static_cast<std::size_t>(words), 0);
          set_bit(cliques.data() + static_cast<std::size_t>(count) * words, v);
          ++count;
        }
      }
    }
    return count;
  }

  void expand(std::uint64_t* cand, int chosen) {
    ++nodes;
    if (nodes > node_budget)
      throw CapExceeded(
          "independence_number: node budget exceeded; raise the budget to "
          "search this instance exactly");
    if ((nodes & (kDeadlineStride - 1)) == 0) deadline.check("independence_number");

    // Pick the highest-degree candidate (within the candidate set); the
    // lowest index wins ties, so the search order is deterministic.
    int branch = -1;
    int branch_deg = -1;
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(words));
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        int v = (w << 6) + __builtin_ctzll(bits);
        bits &= bits - 1;
        const std::uint64_t* av = row(v);
        int d = 0;
        for (int x = 0; x < words; ++x) d += __builtin_popcountll(av[x] & cand[x]);
        if (d > branch_deg) {
          branch_deg = d;
          branch = v;
        }
      }
    }
    if (branch < 0) {
      if (chosen > best) {
        best = chosen;
        best_set = stack;
      }
      return;
    }
    if (chosen + cover_bound(cand) <= best) return;

    // Include branch first: removes the vertex and its whole neighbourhood.
    std::vector<std::uint64_t> with(cand, cand + words);
    clear_bit(with.data(), branch);
    const std::uint64_t* ab = row(branch);
    for (int w = 0; w < words; ++w) with[w] &= ~ab[w];
    stack.push_back(branch);
    expand(with.data(), chosen + 1);
    stack.pop_back();

    clear_bit(cand, branch);
    expand(cand, chosen);
  }
};

}  // namespace

AlphaResult independence_number(const Graph& g, std::uint64_t node_budget,
                                Deadline deadline) {
  const int n = g.vertex_count();
  AlphaResult out;
  if (n == 0) return out;

  MisSolver s;
  s.n = n;
  s.words = (n + 63) / 64;
  s.adj.assign(static_cast<std::size_t>(n) * s.words, 0);
  for (const Edge& e : g.edges()) {
    s.adj[static_cast<std::size_t>(e.u) * s.words + (e.v >> 6)] |= 1ULL << (e.v & 63);
    s.adj[static_cast<std::size_t>(e.v) * s.words + (e.u >> 6)] |= 1ULL << (e.u & 63);
  }
  s.node_budget = node_budget;
  s.deadline = deadline;
  s.cliques.assign(static_cast<std::size_t>(n) * s.words, 0);

  // Greedy warm start: repeatedly take the lowest-degree remaining vertex.
  {
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(s.words), 0);
    for (int v = 0; v < n; ++v) MisSolver::set_bit(cand.data(), v);
    std::vector<int> greedy;
    for (;;) {
      int pick = -1;
      int pick_deg = n + 1;
      for (int w = 0; w < s.words; ++w) {
        std::uint64_t bits = cand[w];
        while (bits) {
          int v = (w << 6) + __builtin_ctzll(bits);
          bits &= bits - 1;
          const std::uint64_t* av = s.row(v);
          int d = 0;
          for (int x = 0; x < s.words; ++x)
            d += __builtin_popcountll(av[x] & cand[x]);
          if (d < pick_deg) {
            pick_deg = d;
            pick = v;
          }
        }
      }
      if (pick < 0) break;
      greedy.push_back(pick);
      MisSolver::clear_bit(cand.data(), pick);
      const std::uint64_t* ap = s.row(pick);
      for (int w = 0; w < s.words; ++w) cand[w] &= ~ap[w];
    }
    s.best = static_cast<int>(greedy.size());
    s.best_set = std::move(greedy);
  }

  std::vector<std::uint64_t> cand(static_cast<std::size_t>(s.words), 0);
  for (int v = 0; v < n; ++v) MisSolver::set_bit(cand.data(), v);
  s.expand(cand.data(), 0);

  out.alpha = s.best;
  out.witness = s.best_set;
  std::sort(out.witness.begin(), out.witness.end());
  out.nodes = s.nodes;

  for (std::size_t i = 0; i < out.witness.size(); ++i)
    for (std::size_t j = i + 1; j < out.witness.size(); ++j)
      if (g.has_edge(out.witness[i], out.witness[j]))
        throw std::logic_error("independence_number: witness is not independent");
  if (static_cast<int>(out.witness.size()) != out.alpha)
    throw std::logic_error("independence_number: witness size mismatch");
  return out;
}

bool has_triangle(const Graph& g) { return !basic_stats(g).triangle_free; }

Rational make_rational(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("make_rational: denominator must be positive");
  if (num < 0) throw std::invalid_argument("make_rational: negative value");
  long long d = std::gcd(num, den);
  if (d > 1) {
    num /= d;
    den /= d;
  }
  return Rational{num, den};
}

std::string rational_text(const Rational& r) {
  if (r.den == 1 || (r.den != 0 && r.num % r.den == 0))
    return std::to_string(r.num / r.den);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

bool rational_less(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

HypothesisReport hypothesis_report(const Graph& g, int r,
                                   std::optional<Rational> alpha_upper,
                                   std::uint64_t node_budget, Deadline deadline) {
  if (r < 0) throw std::invalid_argument("hypothesis_report: negative degree");
  HypothesisReport rep;
  const long long v = g.vertex_count();
  rep.order = static_cast<int>(v);
  rep.r = r;
  rep.regular = true;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (g.degree(u) != r) {
      rep.regular = false;
      break;
    }
  rep.triangle_free = !has_triangle(g);
  rep.order_at_least_8 = v >= 8;

  try {
    AlphaResult a = independence_number(g, node_budget, deadline);
    rep.used_exact = true;
    rep.alpha_value = Rational{a.alpha, 1};
  } catch (const CapExceeded&) {
    if (!alpha_upper) throw;
    rep.used_exact = false;
    rep.alpha_value = *alpha_upper;
  } catch (const BudgetExceeded&) {
    if (!alpha_upper) throw;
    rep.used_exact = false;
    rep.alpha_value = *alpha_upper;
  }

  const long long rr = r;
  // All right-hand sides share denominator 2; numerators may go negative.
  const Rational x1{v - 2, 2};
  const Rational x2{v - 4 * rr + 14, 2};
  const Rational x3{std::min(v - 4, v - 4 * rr + 10), 2};
  const Rational x4{v - 4 * rr + 6, 2};
  rep.super_matched_bound = rational_less(rep.alpha_value, x1);
  rep.mp1_bound = rational_less(rep.alpha_value, x2);
  rep.cond_super_bound = rational_less(rep.alpha_value, x3);
  rep.cond_super_triangle_free_bound = rational_less(rep.alpha_value, x4);
  return rep;
}

}  // namespace netrobust
