#include "netrobust/mincut.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace netrobust {

namespace detail {

PairCutEngine::PairCutEngine(const Graph& g) : g_(&g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  node_of_.assign(n, -1);
  first_.reserve(n + 2);
  next_.reserve(2 * m);
  to_.reserve(2 * m);
  cap_.reserve(2 * m);
  level_.reserve(n + 2);
  iter_.reserve(n + 2);
  queue_.reserve(n + 2);
}

bool PairCutEngine::bfs_() {
  std::fill(level_.begin(), level_.end(), -1);
  int head = 0, tail = 0;
  queue_[tail++] = 0;
  level_[0] = 0;
  while (head < tail) {
    const int v = queue_[head++];
    if (v == 1) return true;  // sink reached; deeper layers are irrelevant
    for (int e = first_[v]; e >= 0; e = next_[e]) {
      if (cap_[e] > 0 && level_[to_[e]] < 0) {
        level_[to_[e]] = level_[v] + 1;
        queue_[tail++] = to_[e];
      }
    }
  }
  return level_[1] >= 0;
}

int PairCutEngine::dfs_(int v, int budget) {
  if (v == 1) return budget;
  for (int& e = iter_[v]; e >= 0; e = next_[e]) {
    if (cap_[e] > 0 && level_[to_[e]] == level_[v] + 1) {
      const int pushed = dfs_(to_[e], 1);
      if (pushed > 0) {
        --cap_[e];
        ++cap_[e ^ 1];
        return pushed;
      }
    }
  }
  level_[v] = -1;  // dead end for this phase
  return 0;
}

MinCutResult PairCutEngine::run(const std::vector<int>& a, const std::vector<int>& b,
                                int upper_bound, bool want_witness) {
  const Graph& g = *g_;
  const int n = g.vertex_count();
  if (a.empty() || b.empty()) throw std::invalid_argument("min cut: empty terminal set");
  if (upper_bound <= 0) upper_bound = INT_MAX;

  // Contract a into node 0 and b into node 1; remaining vertices get nodes
  // 2.. in ascending vertex order (fixed => deterministic arc order).
  std::fill(node_of_.begin(), node_of_.end(), -1);
  for (int v : a) {
    if (v < 0 || v >= n) throw std::invalid_argument("min cut: vertex out of range");
    node_of_[v] = 0;
  }
  for (int v : b) {
    if (v < 0 || v >= n) throw std::invalid_argument("min cut: vertex out of range");
    if (node_of_[v] == 0) throw std::invalid_argument("min cut: terminal sets overlap");
    node_of_[v] = 1;
  }
  int nodes = 2;
  for (int v = 0; v < n; ++v) {
    if (node_of_[v] < 0) node_of_[v] = nodes++;
  }
  nodes_ = nodes;

  first_.assign(nodes, -1);
  next_.clear();
  to_.clear();
  cap_.clear();
  // One antiparallel unit arc pair per undirected edge: the pair doubles as
  // the residual arc in both directions, which models undirected unit
  // capacity exactly.
  for (const Edge& e : g.edges()) {
    const int nu = node_of_[e.u];
    const int nv = node_of_[e.v];
    if (nu == nv) continue;  // both endpoints inside one terminal set
    const int idx = static_cast<int>(to_.size());
    to_.push_back(nv);
    cap_.push_back(1);
    next_.push_back(first_[nu]);
    first_[nu] = idx;
    to_.push_back(nu);
    cap_.push_back(1);
    next_.push_back(first_[nv]);
    first_[nv] = idx + 1;
  }

  level_.assign(nodes, -1);
  iter_.assign(nodes, -1);
  queue_.assign(nodes, 0);

  MinCutResult result;
  int flow = 0;
  while (flow < upper_bound && bfs_()) {
    for (int v = 0; v < nodes; ++v) iter_[v] = first_[v];
    while (flow < upper_bound && dfs_(0, 1) > 0) ++flow;
  }
  if (flow >= upper_bound) {
    result.pruned = true;
    result.value = upper_bound;
    return result;
  }
  result.value = flow;
  if (!want_witness) return result;

  // Residual reachability from the source determines the cut side.
  std::vector<char> reach(nodes, 0);
  int head = 0, tail = 0;
  queue_[tail++] = 0;
  reach[0] = 1;
  while (head < tail) {
    const int v = queue_[head++];
    for (int e = first_[v]; e >= 0; e = next_[e]) {
      if (cap_[e] > 0 && !reach[to_[e]]) {
        reach[to_[e]] = 1;
        queue_[tail++] = to_[e];
      }
    }
  }
  if (reach[1]) throw std::logic_error("min cut: sink reachable after max flow");

  CutWitness& w = result.witness;
  for (int v = 0; v < n; ++v) {
    if (reach[node_of_[v]]) w.side.push_back(v);
  }
  std::vector<char> removed(g.edge_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (reach[node_of_[e.u]] != reach[node_of_[e.v]]) {
      w.cut_edges.push_back(e);
      removed[i] = 1;
    }
  }
  if (static_cast<int>(w.cut_edges.size()) != flow)
    throw std::logic_error("min cut: witness size " + std::to_string(w.cut_edges.size()) +
                           " does not match flow " + std::to_string(flow));

  // Component orders of g minus the cut, largest first.
  std::vector<int> comp(n, -1);
  std::vector<int> bfs(n);
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int size = 0, h = 0, t = 0;
    bfs[t++] = s;
    comp[s] = s;
    while (h < t) {
      const int v = bfs[h++];
      ++size;
      const auto& nbr = g.neighbors(v);
      const auto& inc = g.incident_edges(v);
      for (std::size_t i = 0; i < nbr.size(); ++i) {
        if (removed[inc[i]]) continue;
        const int u = nbr[i];
        if (comp[u] < 0) {
          comp[u] = s;
          bfs[t++] = u;
        }
      }
    }
    w.component_sizes.push_back(size);
  }
  std::sort(w.component_sizes.begin(), w.component_sizes.end(), std::greater<int>());
  return result;
}

}  // namespace detail

MinCutResult min_cut_between(const Graph& g, const std::vector<int>& a,
                             const std::vector<int>& b, int upper_bound) {
  detail::PairCutEngine engine(g);
  return engine.run(a, b, upper_bound, true);
}

ConnectivityResult edge_connectivity(const Graph& g) {
  ConnectivityResult out;
  const int n = g.vertex_count();
  if (n < 2) return out;
  const auto comps = components(g);
  if (comps.size() > 1) {
    out.value = 0;
    out.witness.side = comps[0];
    for (const auto& c : comps) out.witness.component_sizes.push_back(static_cast<int>(c.size()));
    std::sort(out.witness.component_sizes.begin(), out.witness.component_sizes.end(),
              std::greater<int>());
    return out;
  }

  detail::PairCutEngine engine(g);
  // Phase 1: the value. Vertex 0 is on one side of every cut, so sweeping
  // the opposite terminal over all other vertices is exhaustive.
  int best = INT_MAX;
  for (int t = 1; t < n; ++t) {
    const MinCutResult r = engine.run({0}, {t}, best, false);
    if (!r.pruned && r.value < best) best = r.value;
  }
  // Phase 2: deterministic witness — smallest sorted cut-edge list over all
  // targets achieving the value.
  MinCutResult chosen;
  bool have = false;
  for (int t = 1; t < n; ++t) {
    MinCutResult r = engine.run({0}, {t}, best + 1, true);
    if (r.pruned || r.value != best) continue;
    std::sort(r.witness.cut_edges.begin(), r.witness.cut_edges.end());
    if (!have || r.witness.cut_edges < chosen.witness.cut_edges) {
      chosen = std::move(r);
      have = true;
    }
  }
  if (!have) throw std::logic_error("edge connectivity: witness pass lost the optimum");
  out.value = best;
  out.witness = std::move(chosen.witness);
  return out;
}

}  // namespace netrobust
