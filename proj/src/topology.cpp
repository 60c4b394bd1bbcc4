#include "netrobust/topology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "netrobust/runtime.hpp"

namespace netrobust {

namespace {

void require_dcell_params(int k, int n) {
  if (n < 2) throw std::invalid_argument("dcell: n must be at least 2");
  if (k < 0) throw std::invalid_argument("dcell: k must be non-negative");
}

// t_{0..k} as int64, already verified to fit under cap.
std::vector<std::int64_t> small_orders(int k, int n, std::int64_t cap) {
  BigInt t = dcell_order(k, n);
  if (t > cap) {
    throw CapExceeded("dcell order t_{" + std::to_string(k) + "," + std::to_string(n) + "} = " +
                      t.str() + " exceeds vertex cap " + std::to_string(cap));
  }
  std::vector<std::int64_t> tt(static_cast<std::size_t>(k) + 1);
  tt[0] = n;
  for (int j = 1; j <= k; ++j) tt[static_cast<std::size_t>(j)] = tt[j - 1] * (tt[j - 1] + 1);
  return tt;
}

}  // namespace

BigInt dcell_order(int k, int n) {
  require_dcell_params(k, n);
  BigInt t = n;
  for (int j = 1; j <= k; ++j) t = t * (t + 1);
  return t;
}

std::int64_t dcell_uid(const std::vector<int>& suffix, int n) {
  if (suffix.empty()) throw std::invalid_argument("dcell_uid: empty suffix");
  const int j = static_cast<int>(suffix.size()) - 1;
  // suffix = (a_j, ..., a_0); weights are t_{l-1,n} for component a_l.
  std::vector<std::int64_t> tt = small_orders(std::max(j - 1, 0), n, INT64_MAX / 4);
  std::int64_t uid = suffix[static_cast<std::size_t>(j)];
  for (int l = 1; l <= j; ++l) {
    uid += static_cast<std::int64_t>(suffix[static_cast<std::size_t>(j - l)]) * tt[l - 1];
  }
  return uid;
}

std::vector<int> dcell_label_digits(std::int64_t index, int k, int n) {
  std::vector<std::int64_t> tt = small_orders(k, n, INT64_MAX / 4);
  if (index < 0 || index >= tt[static_cast<std::size_t>(k)]) {
    throw std::invalid_argument("dcell_label_digits: index out of range");
  }
  std::vector<int> digits(static_cast<std::size_t>(k) + 1);
  std::int64_t rem = index;
  for (int l = k; l >= 1; --l) {
    digits[static_cast<std::size_t>(k - l)] = static_cast<int>(rem / tt[l - 1]);
    rem %= tt[l - 1];
  }
  digits[static_cast<std::size_t>(k)] = static_cast<int>(rem);
  return digits;
}

Graph gen_dcell(int k, int n, std::int64_t vertex_cap) {
  require_dcell_params(k, n);
  std::vector<std::int64_t> tt = small_orders(k, n, vertex_cap);
  const std::int64_t N = tt[static_cast<std::size_t>(k)];

  std::vector<Edge> edges;
  std::vector<int> levels;
  // Level-0 edges: a complete graph inside every block of n consecutive ids.
  for (std::int64_t base = 0; base < N; base += n) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        edges.push_back({static_cast<int>(base + a), static_cast<int>(base + b)});
        levels.push_back(0);
      }
    }
  }
  // Level-j edges: inside every level-j cell, copy a's vertex with local
  // uid b-1 pairs with copy b's vertex with local uid a, for 0 <= a < b.
  for (int j = 1; j <= k; ++j) {
    const std::int64_t cell = tt[static_cast<std::size_t>(j)];
    const std::int64_t sub = tt[static_cast<std::size_t>(j) - 1];
    for (std::int64_t base = 0; base < N; base += cell) {
      for (std::int64_t a = 0; a <= sub; ++a) {
        for (std::int64_t b = a + 1; b <= sub; ++b) {
          const std::int64_t u = base + a * sub + (b - 1);
          const std::int64_t v = base + b * sub + a;
          edges.push_back({static_cast<int>(u), static_cast<int>(v)});
          levels.push_back(j);
        }
      }
    }
  }

  std::vector<std::string> labels(static_cast<std::size_t>(N));
  for (std::int64_t idx = 0; idx < N; ++idx) {
    std::vector<int> digits = dcell_label_digits(idx, k, n);
    std::string& s = labels[static_cast<std::size_t>(idx)];
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(digits[i]);
    }
  }

  Graph g(static_cast<int>(N), std::move(edges), std::move(levels), std::move(labels));
  // Every vertex has n-1 block neighbours plus one link per level: the
  // total edge count must be N * (n - 1 + k) / 2.
  const std::int64_t expect = N * (n - 1 + k) / 2;
  if (g.edge_count() != expect) throw std::logic_error("gen_dcell: edge count mismatch");
  return g;
}

namespace {

std::string permutation_label(const std::vector<int>& perm, int n) {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (n > 9 && i) s += '.';
    s += std::to_string(perm[i]);
  }
  return s;
}

// All k-permutations of {1..n} in lexicographic order.
void enumerate_permutations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  rec(rec);
}

std::uint64_t encode_permutation(const std::vector<int>& perm) {
  std::uint64_t key = 0;
  for (int s : perm) key = key * 64 + static_cast<std::uint64_t>(s);
  return key;
}

}  // namespace

Graph gen_star(int n, int k, std::int64_t vertex_cap) {
  if (n < 2) throw std::invalid_argument("star: n must be at least 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("star: k must satisfy 1 <= k <= n - 1");
  std::int64_t order = 1;
  for (int i = 0; i < k; ++i) {
    order *= (n - i);
    if (order > vertex_cap) {
      throw CapExceeded("star order exceeds vertex cap " + std::to_string(vertex_cap));
    }
  }

  std::vector<std::vector<int>> perms;
  perms.reserve(static_cast<std::size_t>(order));
  enumerate_permutations(n, k, perms);

  std::map<std::uint64_t, int> index_of;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index_of[encode_permutation(perms[i])] = static_cast<int>(i);
  }

  std::vector<Edge> edges;
  std::vector<std::string> labels(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) {
    labels[i] = permutation_label(perms[i], n);
    const std::vector<int>& p = perms[i];
    std::vector<int> q = p;
    // Swap the first symbol with each later position.
    for (int r = 1; r < k; ++r) {
      std::swap(q[0], q[static_cast<std::size_t>(r)]);
      int j = index_of.at(encode_permutation(q));
      if (static_cast<int>(i) < j) edges.push_back({static_cast<int>(i), j});
      std::swap(q[0], q[static_cast<std::size_t>(r)]);
    }
    // Replace the first symbol with any symbol not present in p.
    std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
    for (int s : p) present[static_cast<std::size_t>(s)] = true;
    for (int s = 1; s <= n; ++s) {
      if (present[static_cast<std::size_t>(s)]) continue;
      q[0] = s;
      int j = index_of.at(encode_permutation(q));
      if (static_cast<int>(i) < j) edges.push_back({static_cast<int>(i), j});
      q[0] = p[0];
    }
  }

  Graph g(static_cast<int>(perms.size()), std::move(edges), {}, std::move(labels));
  const std::int64_t expect = order * ((k - 1) + (n - k)) / 2;
  if (g.edge_count() != expect) throw std::logic_error("gen_star: edge count mismatch");
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be positive");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

VertexMap dcell_star_map(int n) {
  require_dcell_params(1, n);
  VertexMap m;
  m.forward.resize(static_cast<std::size_t>(n) * (n + 1));
  for (int a1 = 0; a1 <= n; ++a1) {
    // Elements of {1..n+1} without b2 = a1 + 1, ascending.
    const int b2 = a1 + 1;
    std::vector<int> rest;
    for (int s = 1; s <= n + 1; ++s) {
      if (s != b2) rest.push_back(s);
    }
    for (int a0 = 0; a0 < n; ++a0) {
      const int b1 = rest[static_cast<std::size_t>(a0)];
      // Lexicographic rank of (b1, b2) among the 2-permutations of {1..n+1}:
      // n tuples per leading symbol, then the position of b2 with b1 removed.
      const int tail_rank = b2 - (b2 > b1 ? 2 : 1);
      const int star_index = (b1 - 1) * n + tail_rank;
      m.forward[static_cast<std::size_t>(a1) * n + a0] = star_index;
    }
  }
  return m;
}

bool check_adjacency_preserving(const Graph& g, const Graph& h, const VertexMap& m) {
  const int n = g.vertex_count();
  if (h.vertex_count() != n) throw std::invalid_argument("adjacency check: order mismatch");
  if (static_cast<int>(m.forward.size()) != n) {
    throw std::invalid_argument("adjacency check: map does not cover every vertex");
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) {
    const int w = m.forward[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n || hit[static_cast<std::size_t>(w)]) {
      throw std::invalid_argument("adjacency check: map is not a bijection");
    }
    hit[static_cast<std::size_t>(w)] = true;
  }
  if (g.edge_count() != h.edge_count()) return false;
  // Same edge count plus "every g-edge maps to an h-edge" makes the edge map
  // a bijection, so the reverse direction needs no separate pass.
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(m.forward[static_cast<std::size_t>(e.u)],
                    m.forward[static_cast<std::size_t>(e.v)])) {
      return false;
    }
  }
  return true;
}

}  // namespace netrobust
