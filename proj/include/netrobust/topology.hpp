#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "netrobust/graph.hpp"

namespace netrobust {

using BigInt = boost::multiprecision::cpp_int;

// Order t_{k,n} of the level-k DCell over n-port switches:
//   t_{0,n} = n,   t_{j,n} = t_{j-1,n} * (t_{j-1,n} + 1).
// Exact for any k (arbitrary precision). Requires n >= 2, k >= 0.
BigInt dcell_order(int k, int n);

// uid_j of a label suffix (a_j, ..., a_1, a_0), highest component first:
//   uid_j = a_0 + sum_{l=1..j} a_l * t_{l-1,n}.
// suffix.size() must be j + 1.
std::int64_t dcell_uid(const std::vector<int>& suffix, int n);

// Digits (a_k, ..., a_0) of the vertex with the given index in DCell_{k,n}.
std::vector<int> dcell_label_digits(std::int64_t index, int k, int n);

// DCell_{k,n}. Vertices are indexed by uid_k; labels are the digit tuples
// "a_k,...,a_0"; each edge carries the level at which the recursion created
// it (0 inside the n-vertex complete blocks). Throws CapExceeded when the
// order t_{k,n} exceeds vertex_cap.
Graph gen_dcell(int k, int n, std::int64_t vertex_cap = 100000);

// (n,k)-star graph S_{n,k}: vertices are the k-permutations of {1..n} in
// lexicographic order; p and q are adjacent when q swaps p's first symbol
// with one of its other positions, or replaces the first symbol by one not
// present in p. Labels are the permutation strings. Requires n >= 2,
// 1 <= k <= n - 1.
Graph gen_star(int n, int k, std::int64_t vertex_cap = 100000);

// Complete graph on n vertices (all edge levels 0).
Graph complete_graph(int n);

// A bijection between equal-order graphs; forward[u] is the image of u.
struct VertexMap {
  std::vector<int> forward;
};

// The canonical isomorphism from DCell_{1,n} onto S_{n+1,2}: the vertex
// (a_1, a_0) maps to the permutation b_1 b_2 with b_2 = a_1 + 1 and b_1 the
// (a_0 + 1)-th smallest element of {1..n+1} minus {b_2}.
VertexMap dcell_star_map(int n);

// True when m is a bijection from g's vertices to h's vertices with
// uv in E(g)  <=>  m(u)m(v) in E(h). Throws std::invalid_argument when the
// two graphs have different orders or m is not a bijection.
bool check_adjacency_preserving(const Graph& g, const Graph& h, const VertexMap& m);

}  // namespace netrobust
