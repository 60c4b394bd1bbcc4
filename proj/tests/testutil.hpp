#pragma once

#include <vector>

#include "netrobust/graph.hpp"

// Small named graphs shared across the test binaries.

inline netrobust::Graph cycle_graph(int n) {
  std::vector<netrobust::Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return netrobust::Graph(n, std::move(edges));
}

inline netrobust::Graph path_graph(int n) {
  std::vector<netrobust::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return netrobust::Graph(n, std::move(edges));
}

// K_{1,m}: vertex 0 is the center.
inline netrobust::Graph star_tree(int m) {
  std::vector<netrobust::Edge> edges;
  for (int leaf = 1; leaf <= m; ++leaf) edges.push_back({0, leaf});
  return netrobust::Graph(m + 1, std::move(edges));
}

inline netrobust::Graph petersen_graph() {
  std::vector<netrobust::Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.push_back({v, (v + 1) % 5});          // outer 5-cycle
    edges.push_back({v, v + 5});                // spokes
    edges.push_back({v + 5, (v + 2) % 5 + 5});  // inner 5-cycle (step 2)
  }
  return netrobust::Graph(10, std::move(edges));
}
