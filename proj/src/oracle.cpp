#include "netrobust/oracle.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

namespace netrobust::oracle {

namespace {

constexpr int kMaxVertices = 12;
constexpr int kMaxEdges = 24;

void guard(const Graph& g, const char* where) {
  if (g.vertex_count() > kMaxVertices || g.edge_count() > kMaxEdges)
    throw std::invalid_argument(std::string(where) +
                                ": instance too large for definition-level "
                                "enumeration (max 12 vertices / 24 edges)");
}

// Component sizes of g minus the edges named by removed (bit i = edge i).
std::vector<int> component_sizes(const Graph& g, std::uint32_t removed) {
  const int n = g.vertex_count();
  std::vector<int> sizes;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    queue.assign(1, s);
    int count = 0;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      ++count;
      const auto& nbr = g.neighbors(u);
      const auto& inc = g.incident_edges(u);
      for (std::size_t i = 0; i < nbr.size(); ++i) {
        if (removed & (1u << inc[i])) continue;
        int v = nbr[i];
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    sizes.push_back(count);
  }
  return sizes;
}

bool is_k_restricted_cut(const Graph& g, std::uint32_t removed, int k) {
  std::vector<int> sizes = component_sizes(g, removed);
  if (sizes.size() < 2) return false;
  for (int s : sizes)
    if (s < k) return false;
  return true;
}

bool leaves_isolated_vertex(const Graph& g, std::uint32_t removed) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    bool live = inc.empty();  // degree-0 vertices count as isolated below
    for (int e : inc)
      if (!(removed & (1u << e))) {
        live = true;
        break;
      }
    if (inc.empty()) return true;
    if (!live) return true;
  }
  return false;
}

bool pm_search(const Graph& g, std::uint32_t removed, std::vector<char>& matched) {
  int u = -1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!matched[static_cast<std::size_t>(v)]) {
      u = v;
      break;
    }
  if (u < 0) return true;
  const auto& nbr = g.neighbors(u);
  const auto& inc = g.incident_edges(u);
  matched[static_cast<std::size_t>(u)] = 1;
  for (std::size_t i = 0; i < nbr.size(); ++i) {
    if (removed & (1u << inc[i])) continue;
    int v = nbr[i];
    if (matched[static_cast<std::size_t>(v)]) continue;
    matched[static_cast<std::size_t>(v)] = 1;
    if (pm_search(g, removed, matched)) return true;
    matched[static_cast<std::size_t>(v)] = 0;
  }
  matched[static_cast<std::size_t>(u)] = 0;
  return false;
}

bool has_pm(const Graph& g, std::uint32_t removed) {
  if (g.vertex_count() % 2 != 0) return false;
  std::vector<char> matched(static_cast<std::size_t>(g.vertex_count()), 0);
  return pm_search(g, removed, matched);
}

}  // namespace

BruteLadder brute_lambda_k(const Graph& g, int k) {
  guard(g, "brute_lambda_k");
  if (k < 1) throw std::invalid_argument("brute_lambda_k: k must be >= 1");
  const int m = g.edge_count();
  BruteLadder out;
  int best = INT_MAX;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    if (is_k_restricted_cut(g, mask, k)) best = size;
  }
  if (best != INT_MAX) {
    out.defined = true;
    out.value = best;
  }
  return out;
}

BruteSuper brute_super_lambda_k(const Graph& g, int k) {
  guard(g, "brute_super_lambda_k");
  BruteLadder base = brute_lambda_k(g, k);
  BruteSuper out;
  if (!base.defined) return out;
  out.defined = true;
  out.super = true;
  const int m = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != base.value) continue;
    if (!is_k_restricted_cut(g, mask, k)) continue;
    std::vector<int> sizes = component_sizes(g, mask);
    bool isolates_order_k = false;
    for (int s : sizes)
      if (s == k) {
        isolates_order_k = true;
        break;
      }
    if (!isolates_order_k) {
      out.super = false;
      return out;
    }
  }
  return out;
}

bool brute_super_edge_connected(const Graph& g, int m, int q) {
  guard(g, "brute_super_edge_connected");
  if (m < 0 || q < 0)
    throw std::invalid_argument("brute_super_edge_connected: negative parameter");
  const int e = g.edge_count();
  const int n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) > m) continue;
    std::vector<int> sizes = component_sizes(g, mask);
    int largest = 0;
    for (int s : sizes) largest = std::max(largest, s);
    if (n - largest > q) return false;
  }
  return true;
}

bool brute_has_perfect_matching(const Graph& g, const std::vector<int>& banned) {
  guard(g, "brute_has_perfect_matching");
  std::uint32_t mask = 0;
  for (int e : banned) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("brute_has_perfect_matching: bad edge index");
    mask |= 1u << e;
  }
  return has_pm(g, mask);
}

namespace {

int max_matching_search(const Graph& g, int edge_index, std::uint32_t used_vertices) {
  if (edge_index >= g.edge_count()) return 0;
  int best = max_matching_search(g, edge_index + 1, used_vertices);
  const Edge& e = g.edges()[static_cast<std::size_t>(edge_index)];
  std::uint32_t ends = (1u << e.u) | (1u << e.v);
  if (!(used_vertices & ends)) {
    int with = 1 + max_matching_search(g, edge_index + 1, used_vertices | ends);
    best = std::max(best, with);
  }
  return best;
}

}  // namespace

int brute_max_matching(const Graph& g) {
  guard(g, "brute_max_matching");
  return max_matching_search(g, 0, 0);
}

BrutePreclusion brute_preclusion(const Graph& g, bool conditional) {
  guard(g, "brute_preclusion");
  const int m = g.edge_count();
  BrutePreclusion out;
  int best = INT_MAX;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    if (conditional && leaves_isolated_vertex(g, mask)) continue;
    if (!has_pm(g, mask)) best = size;
  }
  if (best == INT_MAX) return out;
  out.defined = true;
  out.number = best;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != best) continue;
    if (conditional && leaves_isolated_vertex(g, mask)) continue;
    if (has_pm(g, mask)) continue;
    std::vector<Edge> set;
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) set.push_back(g.edges()[static_cast<std::size_t>(e)]);
    out.optimal_sets.push_back(std::move(set));
  }
  std::sort(out.optimal_sets.begin(), out.optimal_sets.end());
  return out;
}

int brute_independence_number(const Graph& g) {
  guard(g, "brute_independence_number");
  const int n = g.vertex_count();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
      int v = __builtin_ctz(bits);
      if (adj[static_cast<std::size_t>(v)] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

Graph random_connected_graph(DetRng& rng) {
  const int n = 4 + static_cast<int>(rng.below(6));  // 4..9 vertices
  std::vector<Edge> edges;
  auto present = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (const Edge& e : edges)
      if (e.u == a && e.v == b) return true;
    return false;
  };
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng.below(static_cast<std::uint32_t>(v)));
    edges.push_back(Edge{parent, v});
  }
  const int extra = static_cast<int>(rng.below(7));  // 0..6 attempts
  for (int i = 0; i < extra; ++i) {
    int a = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    int b = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    if (a == b || present(a, b)) continue;
    if (a > b) std::swap(a, b);
    edges.push_back(Edge{a, b});
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> standard_corpus(std::uint32_t seed, int count) {
  if (count < 0) throw std::invalid_argument("standard_corpus: negative count");
  DetRng rng(seed);
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_connected_graph(rng));
  return out;
}

}  // namespace netrobust::oracle
