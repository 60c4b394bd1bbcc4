#include "netrobust/matching.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace netrobust {

namespace {

constexpr std::size_t kPoolCap = 64;       // per-worker remembered matchings
constexpr std::uint64_t kRankBlock = 16384;  // candidate ranks per scan block

inline bool test_bit(const std::vector<std::uint64_t>& bits, int i) {
  return (bits[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
}
inline void set_bit(std::vector<std::uint64_t>& bits, int i) {
  bits[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63);
}
inline void clear_bit(std::vector<std::uint64_t>& bits, int i) {
  bits[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63));
}

// Maximum matching via alternating-tree search with blossom contraction.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(&g),
        n_(g.vertex_count()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        queue_(static_cast<std::size_t>(n_)),
        in_tree_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)),
        lca_mark_(static_cast<std::size_t>(n_)) {}

  // Maximum matching size when the flagged edges are unavailable.
  int solve(const std::vector<std::uint64_t>* banned) {
    banned_ = banned;
    std::fill(match_.begin(), match_.end(), -1);
    int matched = 0;
    for (int v = 0; v < n_; ++v) {  // greedy seed cuts most augment calls
      if (match_[static_cast<std::size_t>(v)] >= 0) continue;
      const auto& nbr = g_->neighbors(v);
      const auto& inc = g_->incident_edges(v);
      for (std::size_t i = 0; i < nbr.size(); ++i) {
        if (skip_(inc[i])) continue;
        if (match_[static_cast<std::size_t>(nbr[i])] < 0) {
          match_[static_cast<std::size_t>(v)] = nbr[i];
          match_[static_cast<std::size_t>(nbr[i])] = v;
          ++matched;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[static_cast<std::size_t>(v)] < 0 && augment_(v)) ++matched;
    }
    return matched;
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  bool skip_(int edge_index) const { return banned_ && test_bit(*banned_, edge_index); }

  int lca_(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    int v = a;
    for (;;) {
      v = base_[static_cast<std::size_t>(v)];
      lca_mark_[static_cast<std::size_t>(v)] = 1;
      if (match_[static_cast<std::size_t>(v)] < 0) break;
      v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
    }
    v = b;
    for (;;) {
      v = base_[static_cast<std::size_t>(v)];
      if (lca_mark_[static_cast<std::size_t>(v)]) return v;
      v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
    }
  }

  void mark_path_(int v, int stem, int child) {
    while (base_[static_cast<std::size_t>(v)] != stem) {
      const int mv = match_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  bool augment_(int root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
    in_tree_[static_cast<std::size_t>(root)] = 1;
    int qh = 0, qt = 0;
    queue_[static_cast<std::size_t>(qt++)] = root;
    while (qh < qt) {
      const int v = queue_[static_cast<std::size_t>(qh++)];
      const auto& nbr = g_->neighbors(v);
      const auto& inc = g_->incident_edges(v);
      for (std::size_t i = 0; i < nbr.size(); ++i) {
        if (skip_(inc[i])) continue;
        const int to = nbr[i];
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] >= 0 &&
             parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] >= 0)) {
          // Odd cycle: contract the blossom at the common ancestor.
          const int stem = lca_(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path_(v, stem, to);
          mark_path_(to, stem, v);
          for (int u = 0; u < n_; ++u) {
            if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(u)])]) {
              base_[static_cast<std::size_t>(u)] = stem;
              if (!in_tree_[static_cast<std::size_t>(u)]) {
                in_tree_[static_cast<std::size_t>(u)] = 1;
                queue_[static_cast<std::size_t>(qt++)] = u;
              }
            }
          }
        } else if (parent_[static_cast<std::size_t>(to)] < 0) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (match_[static_cast<std::size_t>(to)] < 0) {
            int u = to;  // flip the alternating path back to the root
            while (u >= 0) {
              const int pv = parent_[static_cast<std::size_t>(u)];
              const int ppv = match_[static_cast<std::size_t>(pv)];
              match_[static_cast<std::size_t>(u)] = pv;
              match_[static_cast<std::size_t>(pv)] = u;
              u = ppv;
            }
            return true;
          }
          in_tree_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] = 1;
          queue_[static_cast<std::size_t>(qt++)] = match_[static_cast<std::size_t>(to)];
        }
      }
    }
    return false;
  }

  const Graph* g_;
  int n_;
  const std::vector<std::uint64_t>* banned_ = nullptr;
  std::vector<int> match_, parent_, base_, queue_;
  std::vector<char> in_tree_, in_blossom_, lca_mark_;
};

std::size_t edge_words(const Graph& g) {
  return (static_cast<std::size_t>(g.edge_count()) + 63) / 64;
}

std::vector<std::uint64_t> matching_bits(const Graph& g, const std::vector<int>& mate) {
  std::vector<std::uint64_t> bits(edge_words(g), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int u = mate[static_cast<std::size_t>(v)];
    if (u > v) set_bit(bits, g.edge_index(v, u));
  }
  return bits;
}

// Blocks used by the semi-trivial pattern: level-0 components when the graph
// carries levels, maximal cliques of order >= 3 otherwise.
std::vector<std::vector<int>> pattern_blocks(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> blocks;
  if (g.has_levels()) {
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      int head = 0, tail = 0;
      queue[static_cast<std::size_t>(tail++)] = s;
      comp[static_cast<std::size_t>(s)] = s;
      std::vector<int> members;
      while (head < tail) {
        const int v = queue[static_cast<std::size_t>(head++)];
        members.push_back(v);
        const auto& nbr = g.neighbors(v);
        const auto& inc = g.incident_edges(v);
        for (std::size_t i = 0; i < nbr.size(); ++i) {
          if (g.levels()[static_cast<std::size_t>(inc[i])] != 0) continue;
          if (comp[static_cast<std::size_t>(nbr[i])] < 0) {
            comp[static_cast<std::size_t>(nbr[i])] = s;
            queue[static_cast<std::size_t>(tail++)] = nbr[i];
          }
        }
      }
      if (members.size() >= 2) {
        std::sort(members.begin(), members.end());
        blocks.push_back(std::move(members));
      }
    }
    return blocks;
  }

  // Bron-Kerbosch with pivoting; intended for the small unlevelled graphs
  // (permutation-star instances, test corpora).
  std::size_t count = 0;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> expand =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          if (r.size() >= 3) {
            if (++count > 10000) throw CapExceeded("pattern blocks: too many maximal cliques");
            blocks.push_back(r);
          }
          return;
        }
        const int pivot = p.empty() ? x.front() : p.front();
        std::vector<int> cands;
        for (int v : p) {
          if (!g.has_edge(pivot, v)) cands.push_back(v);
        }
        for (int v : cands) {
          std::vector<int> np, nx;
          for (int u : p)
            if (g.has_edge(u, v)) np.push_back(u);
          for (int u : x)
            if (g.has_edge(u, v)) nx.push_back(u);
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
      };
  std::vector<int> r, p(static_cast<std::size_t>(n)), x;
  for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = v;
  expand(r, std::move(p), std::move(x));
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<Edge> block_boundary(const Graph& g, const std::vector<int>& block) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : block) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) out.push_back(e);
  }
  return out;  // edge scan order is already sorted
}

bool leaves_isolated_vertex(const Graph& g, const std::vector<std::uint64_t>& fmask,
                            const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    for (int v : {e.u, e.v}) {
      bool alive = false;
      for (int idx : g.incident_edges(v)) {
        if (!test_bit(fmask, idx)) {
          alive = true;
          break;
        }
      }
      if (!alive) return true;
    }
  }
  return false;
}

// Fills kind and anchors for a (verified) deletion set. Patterns are tested
// from most to least specific; ambiguity is impossible between trivial and
// the others (different shapes), and the first match in a fixed order makes
// the outcome deterministic anyway.
void classify_pattern(const Graph& g, PreclusionWitness& w,
                      const std::vector<std::vector<int>>& blocks) {
  w.kind = PreclusionKind::Other;
  const std::size_t size = w.edges.size();
  if (size == 0) return;

  // Trivial: the whole star of one vertex.
  for (int v : {w.edges.front().u, w.edges.front().v}) {
    if (static_cast<std::size_t>(g.degree(v)) != size) continue;
    bool all = true;
    for (const Edge& e : w.edges) {
      if (e.u != v && e.v != v) {
        all = false;
        break;
      }
    }
    if (all) {
      w.kind = PreclusionKind::Trivial;
      w.anchor_vertex = v;
      return;
    }
  }

  // Semi-trivial: the whole boundary of one block.
  for (const auto& block : blocks) {
    if (block_boundary(g, block) == w.edges) {
      w.kind = PreclusionKind::SemiTrivial;
      w.anchor_block = block;
      return;
    }
  }

  // Trivial conditional: both stars of the ends of a 2-path u-v-w minus the
  // path edges themselves.
  std::vector<std::uint64_t> fmask(edge_words(g), 0);
  for (const Edge& e : w.edges) set_bit(fmask, g.edge_index(e.u, e.v));
  if (!leaves_isolated_vertex(g, fmask, w.edges)) {
    std::vector<int> ends;
    for (const Edge& e : w.edges) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        const int u = ends[i], x = ends[j];
        for (int v : g.neighbors(u)) {
          if (v == x || !g.has_edge(v, x)) continue;
          const int uv = g.edge_index(std::min(u, v), std::max(u, v));
          const int vx = g.edge_index(std::min(v, x), std::max(v, x));
          if (test_bit(fmask, uv) || test_bit(fmask, vx)) continue;
          std::vector<Edge> expected;
          for (int idx : g.incident_edges(u)) {
            if (idx != uv) expected.push_back(g.edges()[static_cast<std::size_t>(idx)]);
          }
          for (int idx : g.incident_edges(x)) {
            if (idx != vx && idx != g.edge_index(std::min(u, x), std::max(u, x)))
              expected.push_back(g.edges()[static_cast<std::size_t>(idx)]);
          }
          std::sort(expected.begin(), expected.end());
          expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
          if (expected == w.edges) {
            w.kind = PreclusionKind::TrivialConditional;
            w.anchor_path = {u, v, x};
            return;
          }
        }
      }
    }
  }
}

struct MpContext {
  const Graph* g = nullptr;
  bool conditional = false;
  std::size_t ewords = 0;
  std::vector<std::vector<std::uint64_t>> base_pool;
};

struct MpWorker {
  BlossomMatcher matcher;
  std::vector<std::uint64_t> fmask;
  std::vector<std::vector<std::uint64_t>> pool;
  std::size_t evict = 0;

  explicit MpWorker(const MpContext& ctx)
      : matcher(*ctx.g), fmask(ctx.ewords, 0), pool(ctx.base_pool) {}
};

// True when deleting the picked edges destroys every perfect matching (and,
// in conditional mode, isolates nothing). Remembered matchings only skip
// blossom calls; they never change the outcome.
bool is_preclusion(const MpContext& ctx, MpWorker& w, const std::vector<int>& pick) {
  const Graph& g = *ctx.g;
  for (int e : pick) set_bit(w.fmask, e);
  bool result = false;
  bool valid = true;
  if (ctx.conditional) {
    for (int e : pick) {
      const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
      for (int v : {ed.u, ed.v}) {
        bool alive = false;
        for (int idx : g.incident_edges(v)) {
          if (!test_bit(w.fmask, idx)) {
            alive = true;
            break;
          }
        }
        if (!alive) {
          valid = false;
          break;
        }
      }
      if (!valid) break;
    }
  }
  if (valid) {
    bool survived = false;
    for (const auto& pm : w.pool) {
      bool clash = false;
      for (std::size_t i = 0; i < ctx.ewords; ++i) {
        if (pm[i] & w.fmask[i]) {
          clash = true;
          break;
        }
      }
      if (!clash) {
        survived = true;
        break;
      }
    }
    if (!survived) {
      if (2 * w.matcher.solve(&w.fmask) == g.vertex_count()) {
        auto bits = matching_bits(g, w.matcher.mate());
        if (w.pool.size() < kPoolCap) {
          w.pool.push_back(std::move(bits));
        } else {
          w.pool[w.evict] = std::move(bits);
          w.evict = (w.evict + 1) % kPoolCap;
        }
      } else {
        result = true;
      }
    }
  }
  for (int e : pick) clear_bit(w.fmask, e);
  return result;
}

std::vector<std::vector<std::uint64_t>> seed_pool(const Graph& g) {
  std::vector<std::vector<std::uint64_t>> pool;
  BlossomMatcher matcher(g);
  if (2 * matcher.solve(nullptr) != g.vertex_count()) return pool;
  const auto first = matching_bits(g, matcher.mate());
  pool.push_back(first);
  std::vector<std::uint64_t> banned(edge_words(g), 0);
  for (int e = 0; e < g.edge_count() && pool.size() < 33; ++e) {
    if (!test_bit(first, e)) continue;
    set_bit(banned, e);
    if (2 * matcher.solve(&banned) == g.vertex_count())
      pool.push_back(matching_bits(g, matcher.mate()));
    clear_bit(banned, e);
  }
  return pool;
}

PreclusionResult preclusion_trivial_cases(const Graph& g, bool conditional, bool exhaustive,
                                          bool& done) {
  PreclusionResult out;
  out.exhaustive = exhaustive;
  done = true;
  if (conditional) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) {
        out.defined = false;  // every deletion leaves this vertex isolated
        return out;
      }
    }
  }
  if (!has_perfect_matching(g)) {
    out.number = 0;  // the empty deletion already precludes
    out.witnesses.emplace_back();
    return out;
  }
  done = false;
  return out;
}

PreclusionResult finish_result(const Graph& g, bool conditional, bool exhaustive, int size,
                               const std::vector<std::uint64_t>& hit_ranks, std::uint64_t tested,
                               const MatchingLimits& limits) {
  PreclusionResult out;
  out.defined = true;
  out.number = size;
  out.exhaustive = exhaustive;
  out.tested = tested;
  if (hit_ranks.size() > limits.max_witnesses)
    throw CapExceeded("matching preclusion: more than " + std::to_string(limits.max_witnesses) +
                      " optimal sets");
  const auto blocks = pattern_blocks(g);
  for (std::uint64_t rank : hit_ranks) {
    PreclusionWitness w;
    for (int idx : unrank_combination(g.edge_count(), size, rank))
      w.edges.push_back(g.edges()[static_cast<std::size_t>(idx)]);
    classify_pattern(g, w, blocks);
    if (conditional && w.kind == PreclusionKind::Trivial)
      throw std::logic_error("matching preclusion: trivial set passed the isolation filter");
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

PreclusionResult preclusion_search_parallel(const Graph& g, bool conditional, bool exhaustive,
                                            const MatchingLimits& limits) {
  bool done = false;
  PreclusionResult early = preclusion_trivial_cases(g, conditional, exhaustive, done);
  if (done) return early;

  MpContext ctx;
  ctx.g = &g;
  ctx.conditional = conditional;
  ctx.ewords = edge_words(g);
  ctx.base_pool = seed_pool(g);

  const int m = g.edge_count();
  std::uint64_t tested = 0;
  for (int size = 1; size <= m; ++size) {
    const std::uint64_t count = binom_capped(m, size, limits.max_tests);
    if (tested + count > limits.max_tests)
      throw CapExceeded("matching preclusion: candidate sets of size " + std::to_string(size) +
                        " exceed the test cap");
    std::vector<std::uint64_t> hits;
    for (std::uint64_t base = 0; base < count; base += kRankBlock) {
      limits.deadline.check("matching preclusion scan");
      const std::uint64_t hi = std::min(count, base + kRankBlock);
      std::atomic<std::int64_t> first_hit{-1};
#ifdef _OPENMP
#pragma omp parallel
#endif
      {
        MpWorker worker(ctx);
        std::vector<std::uint64_t> my_hits;
#ifdef _OPENMP
        const int nth = omp_get_num_threads();
        const int tid = omp_get_thread_num();
#else
        const int nth = 1;
        const int tid = 0;
#endif
        const std::uint64_t span = hi - base;
        const std::uint64_t chunk =
            (span + static_cast<std::uint64_t>(nth) - 1) / static_cast<std::uint64_t>(nth);
        const std::uint64_t lo_r = base + chunk * static_cast<std::uint64_t>(tid);
        const std::uint64_t hi_r = std::min(hi, lo_r + chunk);
        if (lo_r < hi_r) {
          Combinations comb(m, size, unrank_combination(m, size, lo_r));
          for (std::uint64_t rank = lo_r; rank < hi_r; ++rank) {
            if (is_preclusion(ctx, worker, comb.current())) {
              if (exhaustive) {
                my_hits.push_back(rank);
              } else {
                std::int64_t cur = first_hit.load(std::memory_order_relaxed);
                const std::int64_t mine = static_cast<std::int64_t>(rank);
                while ((cur < 0 || mine < cur) &&
                       !first_hit.compare_exchange_weak(cur, mine, std::memory_order_relaxed)) {
                }
                break;
              }
            }
            if (rank + 1 < hi_r) comb.next();
          }
        }
        if (!my_hits.empty()) {
#ifdef _OPENMP
#pragma omp critical(netrobust_mp_hits)
#endif
          hits.insert(hits.end(), my_hits.begin(), my_hits.end());
        }
      }
      tested += hi - base;
      if (!exhaustive) {
        const std::int64_t found = first_hit.load();
        if (found >= 0) {
          return finish_result(g, conditional, exhaustive, size,
                               {static_cast<std::uint64_t>(found)}, tested, limits);
        }
      }
    }
    if (!hits.empty()) {
      std::sort(hits.begin(), hits.end());
      return finish_result(g, conditional, exhaustive, size, hits, tested, limits);
    }
  }
  PreclusionResult out;
  out.defined = false;
  out.exhaustive = exhaustive;
  out.tested = tested;
  return out;
}

PreclusionResult preclusion_search_serial(const Graph& g, bool conditional, bool exhaustive,
                                          const MatchingLimits& limits) {
  bool done = false;
  PreclusionResult early = preclusion_trivial_cases(g, conditional, exhaustive, done);
  if (done) return early;

  MpContext ctx;
  ctx.g = &g;
  ctx.conditional = conditional;
  ctx.ewords = edge_words(g);
  ctx.base_pool = seed_pool(g);
  MpWorker worker(ctx);

  const int m = g.edge_count();
  std::uint64_t tested = 0;
  for (int size = 1; size <= m; ++size) {
    const std::uint64_t count = binom_capped(m, size, limits.max_tests);
    if (tested + count > limits.max_tests)
      throw CapExceeded("matching preclusion: candidate sets of size " + std::to_string(size) +
                        " exceed the test cap");
    std::vector<std::uint64_t> hits;
    Combinations comb(m, size);
    std::uint64_t rank = 0;
    while (comb.next()) {
      if ((rank & (kRankBlock - 1)) == 0) limits.deadline.check("matching preclusion scan");
      ++tested;
      if (is_preclusion(ctx, worker, comb.current())) {
        hits.push_back(rank);
        if (!exhaustive) break;
      }
      ++rank;
    }
    if (!hits.empty()) return finish_result(g, conditional, exhaustive, size, hits, tested, limits);
  }
  PreclusionResult out;
  out.defined = false;
  out.exhaustive = exhaustive;
  out.tested = tested;
  return out;
}

MatchedStatus matched_status_impl(const Graph& g, bool conditional,
                                  const MatchingLimits& limits) {
  MatchedStatus status;
  PreclusionResult r;
  try {
    r = conditional ? mp1_number(g, true, limits) : mp_number(g, true, limits);
  } catch (const CapExceeded& e) {
    status.evidence = e.what();
    return status;
  } catch (const BudgetExceeded& e) {
    status.evidence = e.what();
    return status;
  }
  if (!r.defined) {
    throw std::invalid_argument(conditional
                                    ? "no conditional matching preclusion set exists"
                                    : "no matching preclusion set exists");
  }
  status.number = r.number;
  const PreclusionKind wanted =
      conditional ? PreclusionKind::TrivialConditional : PreclusionKind::Trivial;
  for (const auto& w : r.witnesses) {
    if (w.kind != wanted) {
      status.verdict = Verdict::Refuted;
      status.counterexample = w.edges;
      status.evidence = std::string("optimal set of kind ") + preclusion_kind_name(w.kind) +
                        " is not " + preclusion_kind_name(wanted);
      return status;
    }
  }
  status.verdict = Verdict::Proven;
  status.evidence = "all " + std::to_string(r.witnesses.size()) + " optimal sets are " +
                    preclusion_kind_name(wanted);
  return status;
}

}  // namespace

const char* preclusion_kind_name(PreclusionKind k) {
  switch (k) {
    case PreclusionKind::Trivial:
      return "trivial";
    case PreclusionKind::SemiTrivial:
      return "semi-trivial";
    case PreclusionKind::TrivialConditional:
      return "trivial-conditional";
    default:
      return "other";
  }
}

std::vector<Edge> maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g);
  matcher.solve(nullptr);
  std::vector<Edge> out;
  const auto& mate = matcher.mate();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (mate[static_cast<std::size_t>(v)] > v) out.push_back({v, mate[static_cast<std::size_t>(v)]});
  }
  return out;  // ascending v: already sorted
}

bool has_perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return false;
  BlossomMatcher matcher(g);
  return 2 * matcher.solve(nullptr) == g.vertex_count();
}

PreclusionResult mp_number(const Graph& g, bool exhaustive, const MatchingLimits& limits) {
  return preclusion_search_parallel(g, false, exhaustive, limits);
}

PreclusionResult mp_number_serial(const Graph& g, bool exhaustive, const MatchingLimits& limits) {
  return preclusion_search_serial(g, false, exhaustive, limits);
}

PreclusionResult mp1_number(const Graph& g, bool exhaustive, const MatchingLimits& limits) {
  return preclusion_search_parallel(g, true, exhaustive, limits);
}

PreclusionResult mp1_number_serial(const Graph& g, bool exhaustive, const MatchingLimits& limits) {
  return preclusion_search_serial(g, true, exhaustive, limits);
}

VeResult v_e(const Graph& g) {
  VeResult best;
  best.value = INT_MAX;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nbr = g.neighbors(v);
    for (std::size_t i = 0; i < nbr.size(); ++i) {
      for (std::size_t j = i + 1; j < nbr.size(); ++j) {
        const int u = nbr[i], w = nbr[j];
        const int value = g.degree(u) + g.degree(w) - 2 - (g.has_edge(u, w) ? 1 : 0);
        if (value < best.value) {
          best.value = value;
          best.path = {u, v, w};
        }
      }
    }
  }
  if (best.value == INT_MAX) throw std::invalid_argument("v_e: graph has no 2-path");

  const int u = best.path[0], v = best.path[1], w = best.path[2];
  std::vector<int> keep_away{g.edge_index(std::min(u, v), std::max(u, v)),
                             g.edge_index(std::min(v, w), std::max(v, w))};
  std::vector<int> chosen;
  for (int idx : g.incident_edges(u)) chosen.push_back(idx);
  for (int idx : g.incident_edges(w)) chosen.push_back(idx);
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (int idx : chosen) {
    if (idx != keep_away[0] && idx != keep_away[1])
      best.edges.push_back(g.edges()[static_cast<std::size_t>(idx)]);
  }
  if (static_cast<int>(best.edges.size()) != best.value)
    throw std::logic_error("v_e: witness size disagrees with the bound");
  return best;
}

PreclusionKind classify_preclusion_set(const Graph& g, const std::vector<Edge>& set,
                                       bool conditional) {
  PreclusionWitness w;
  w.edges = set;
  for (Edge& e : w.edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(w.edges.begin(), w.edges.end());
  w.edges.erase(std::unique(w.edges.begin(), w.edges.end()), w.edges.end());

  std::vector<std::uint64_t> fmask(edge_words(g), 0);
  for (const Edge& e : w.edges) {
    const int idx = g.edge_index(e.u, e.v);
    if (idx < 0) throw std::invalid_argument("classify_preclusion_set: edge not in graph");
    set_bit(fmask, idx);
  }
  BlossomMatcher matcher(g);
  if (g.vertex_count() % 2 == 0 && 2 * matcher.solve(&fmask) == g.vertex_count())
    throw std::invalid_argument("classify_preclusion_set: not a preclusion set");
  if (conditional && leaves_isolated_vertex(g, fmask, w.edges))
    throw std::invalid_argument("classify_preclusion_set: leaves an isolated vertex");

  classify_pattern(g, w, pattern_blocks(g));
  return w.kind;
}

MatchedStatus super_matched_status(const Graph& g, const MatchingLimits& limits) {
  if (!has_perfect_matching(g))
    throw std::invalid_argument("super_matched_status: graph has no perfect matching");
  return matched_status_impl(g, false, limits);
}

MatchedStatus cond_super_matched_status(const Graph& g, const MatchingLimits& limits) {
  return matched_status_impl(g, true, limits);
}

}  // namespace netrobust
