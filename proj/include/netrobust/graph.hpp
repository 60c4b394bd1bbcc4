#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netrobust {

// Undirected edge on dense 0-based vertex indices; invariant u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Simple undirected graph: no self-loops, no parallel edges. Immutable after
// construction so analyses can share const references freely. Each edge
// carries an integer level tag (0 when the source had none) and vertices may
// carry free-form labels.
class Graph {
 public:
  Graph() = default;
  // Edges may arrive in any order and orientation; they are normalised to
  // u < v and sorted. levels must be empty or parallel to edges; labels must
  // be empty or one entry per vertex. Throws std::invalid_argument on
  // duplicate or out-of-range edges.
  Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> levels = {},
        std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& levels() const { return levels_; }
  bool has_levels() const { return has_levels_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  // Neighbours in ascending order; incident_edges is index-parallel to it.
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& incident_edges(int v) const { return inc_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 when absent

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_ && levels_ == o.levels_ && labels_ == o.labels_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;               // sorted lexicographically
  std::vector<int> levels_;               // parallel to edges_, default 0
  bool has_levels_ = false;               // true when any level tag is nonzero
  std::vector<std::string> labels_;       // empty, or one per vertex
  std::vector<std::vector<int>> adj_;     // sorted neighbour lists
  std::vector<std::vector<int>> inc_;     // edge indices parallel to adj_
};

// Degree summary plus a triangle-freeness flag.
struct StatsRecord {
  int min_degree = 0;
  int max_degree = 0;
  bool is_regular = false;
  std::optional<int> regular_degree;
  bool triangle_free = true;
};

// Text format, one record per line, '#' starts a comment line:
//   p <vertices> <edges>
//   v <index> <label>          (optional)
//   e <u> <v> [level]          (u < v required; level defaults to 0)
// The header must come first and the edge count must match exactly.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Connected components, largest first, ties by smallest contained vertex;
// vertices inside each component are ascending.
std::vector<std::vector<int>> components(const Graph& g);

StatsRecord basic_stats(const Graph& g);

// Number of common neighbours of distinct vertices u and v.
int common_neighbor_count(const Graph& g, int u, int v);

}  // namespace netrobust
