#include "netrobust/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace netrobust {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> levels,
             std::vector<std::string> labels)
    : n_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("graph: negative vertex count");
  if (!levels.empty() && levels.size() != edges.size()) {
    throw std::invalid_argument("graph: level list not parallel to edge list");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(vertex_count)) {
    throw std::invalid_argument("graph: label list must cover every vertex");
  }
  for (Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= vertex_count) throw std::invalid_argument("graph: endpoint out of range");
  }
  // Sort edges and keep levels parallel.
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  edges_.reserve(edges.size());
  levels_.reserve(edges.size());
  for (std::size_t pos : order) {
    edges_.push_back(edges[pos]);
    levels_.push_back(levels.empty() ? 0 : levels[pos]);
  }
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) throw std::invalid_argument("graph: duplicate edge");
  }
  has_levels_ = std::any_of(levels_.begin(), levels_.end(), [](int l) { return l != 0; });
  labels_ = std::move(labels);

  adj_.assign(static_cast<std::size_t>(n_), {});
  inc_.assign(static_cast<std::size_t>(n_), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj_[static_cast<std::size_t>(edges_[i].u)].push_back(edges_[i].v);
    adj_[static_cast<std::size_t>(edges_[i].v)].push_back(edges_[i].u);
    inc_[static_cast<std::size_t>(edges_[i].u)].push_back(static_cast<int>(i));
    inc_[static_cast<std::size_t>(edges_[i].v)].push_back(static_cast<int>(i));
  }
  for (int v = 0; v < n_; ++v) {
    auto& a = adj_[static_cast<std::size_t>(v)];
    auto& ic = inc_[static_cast<std::size_t>(v)];
    std::vector<std::size_t> ord(a.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });
    std::vector<int> a2(a.size()), ic2(ic.size());
    for (std::size_t i = 0; i < ord.size(); ++i) {
      a2[i] = a[ord[i]];
      ic2[i] = ic[ord[i]];
    }
    a = std::move(a2);
    ic = std::move(ic2);
  }
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n_ || u == v) return -1;
  const Edge probe{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
  if (it != edges_.end() && *it == probe) return static_cast<int>(it - edges_.begin());
  return -1;
}

namespace {

// Splits a line into whitespace tokens.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected integer for ") + what);
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int n = -1;
  long long declared_edges = -1;
  std::vector<Edge> edges;
  std::vector<int> levels;
  std::vector<std::string> labels;
  bool any_label = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;      // blank
    if (line[first] == '#') continue;                   // comment

    auto tok = tokenize(line);
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 3) throw ParseError(line_no, "header needs: p <vertices> <edges>");
      long long nn = parse_int(tok[1], line_no, "vertex count");
      declared_edges = parse_int(tok[2], line_no, "edge count");
      if (nn < 0 || nn > (1LL << 31) - 1 || declared_edges < 0) {
        throw ParseError(line_no, "header counts out of range");
      }
      n = static_cast<int>(nn);
      labels.assign(static_cast<std::size_t>(n), "");
      continue;
    }
    if (n < 0) throw ParseError(line_no, "record before header");
    if (tok[0] == "v") {
      if (tok.size() < 3) throw ParseError(line_no, "vertex record needs: v <index> <label>");
      long long idx = parse_int(tok[1], line_no, "vertex index");
      if (idx < 0 || idx >= n) throw ParseError(line_no, "vertex index out of range");
      if (!labels[static_cast<std::size_t>(idx)].empty()) {
        throw ParseError(line_no, "duplicate label for vertex " + std::to_string(idx));
      }
      // Label is everything from the third token onward, preserving inner spaces.
      std::size_t label_at = static_cast<std::size_t>(tok[2].data() - line.data());
      std::string_view label = line.substr(label_at);
      while (!label.empty() && (label.back() == ' ' || label.back() == '\t')) label.remove_suffix(1);
      labels[static_cast<std::size_t>(idx)] = std::string(label);
      any_label = true;
      continue;
    }
    if (tok[0] == "e") {
      if (tok.size() != 3 && tok.size() != 4) {
        throw ParseError(line_no, "edge record needs: e <u> <v> [level]");
      }
      long long u = parse_int(tok[1], line_no, "edge endpoint");
      long long v = parse_int(tok[2], line_no, "edge endpoint");
      long long lvl = tok.size() == 4 ? parse_int(tok[3], line_no, "edge level") : 0;
      if (u < 0 || v >= n || v < 0 || u >= n) throw ParseError(line_no, "edge endpoint out of range");
      if (u >= v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
      if (lvl < 0 || lvl > 1000000) throw ParseError(line_no, "edge level out of range");
      for (const Edge& prev : edges) {
        if (prev.u == u && prev.v == v) throw ParseError(line_no, "duplicate edge");
      }
      edges.push_back({static_cast<int>(u), static_cast<int>(v)});
      levels.push_back(static_cast<int>(lvl));
      continue;
    }
    throw ParseError(line_no, "unknown record type '" + std::string(tok[0]) + "'");
  }
  if (n < 0) throw ParseError(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != declared_edges) {
    throw ParseError(line_no, "edge count mismatch: header declares " +
                                  std::to_string(declared_edges) + ", found " +
                                  std::to_string(edges.size()));
  }
  try {
    return Graph(n, std::move(edges), std::move(levels),
                 any_label ? std::move(labels) : std::vector<std::string>{});
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (g.has_labels()) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!g.labels()[static_cast<std::size_t>(v)].empty()) {
        out << "v " << v << ' ' << g.labels()[static_cast<std::size_t>(v)] << '\n';
      }
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    out << "e " << e.u << ' ' << e.v << ' ' << g.levels()[static_cast<std::size_t>(i)] << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> groups;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(groups.size());
    groups.emplace_back();
    comp[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      groups[static_cast<std::size_t>(id)].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(groups.back().begin(), groups.back().end());
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return groups;
}

StatsRecord basic_stats(const Graph& g) {
  StatsRecord rec;
  const int n = g.vertex_count();
  if (n == 0) {
    rec.is_regular = true;
    rec.regular_degree = 0;
    return rec;
  }
  rec.min_degree = g.degree(0);
  rec.max_degree = g.degree(0);
  for (int v = 1; v < n; ++v) {
    rec.min_degree = std::min(rec.min_degree, g.degree(v));
    rec.max_degree = std::max(rec.max_degree, g.degree(v));
  }
  rec.is_regular = rec.min_degree == rec.max_degree;
  if (rec.is_regular) rec.regular_degree = rec.min_degree;
  rec.triangle_free = true;
  for (const Edge& e : g.edges()) {
    if (common_neighbor_count(g, e.u, e.v) > 0) {
      rec.triangle_free = false;
      break;
    }
  }
  return rec;
}

int common_neighbor_count(const Graph& g, int u, int v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace netrobust
