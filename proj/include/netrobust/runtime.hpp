#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace netrobust {

// Thrown when an enumeration would exceed its configured cap. Callers that
// can degrade gracefully catch it and report an explicit "unknown"/skip;
// nothing in the library ever silently truncates a search space.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a cooperative deadline expires inside a long-running search.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cooperative wall-clock deadline. Heavy loops call check() between work
// blocks; the default-constructed deadline never fires.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after_ms(std::int64_t ms);
  bool enabled() const { return enabled_; }
  bool expired() const;
  void check(const char* what) const;  // throws BudgetExceeded

 private:
  std::chrono::steady_clock::time_point end_{};
  bool enabled_ = false;
};

// Worker count for the OpenMP kernels: NETROBUST_THREADS when set (clamped
// to >= 1), otherwise the OpenMP default for this machine.
int worker_count();

// Per-query time budget in milliseconds: NETROBUST_BUDGET_MS when set,
// otherwise 600000 (ten minutes).
std::int64_t default_budget_ms();

// Binomial coefficient, saturating: returns cap + 1 as soon as the exact
// value would exceed cap, so callers can test feasibility without overflow.
std::uint64_t binom_capped(std::int64_t n, std::int64_t k, std::uint64_t cap);

// Lexicographic enumeration of k-element subsets of {0..n-1}.
struct Combinations {
  Combinations(int n, int k);
  // Starts at the given combination (current() is valid immediately); used
  // by parallel scans that unrank the first element of their chunk.
  Combinations(int n, int k, std::vector<int> start);
  // Advances to the next combination; the first call yields the first one.
  // Returns false when the sequence is exhausted.
  bool next();
  const std::vector<int>& current() const { return idx_; }

 private:
  int n_, k_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> idx_;
};

// The rank-th k-subset of {0..n-1} in lexicographic order (rank 0-based).
// Requires rank < C(n, k).
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

// Deterministic pseudo-random source for reproducible corpora. The raw
// mt19937 stream is pinned by the standard; bounded draws use plain modulo
// instead of std distributions, whose output is implementation-defined and
// would break cross-platform reproducibility.
class DetRng {
 public:
  explicit DetRng(std::uint32_t seed) : gen_(seed) {}
  std::uint32_t raw() { return gen_(); }
  // Value in [0, m); m >= 1. Modulo bias is irrelevant at corpus scale.
  std::uint32_t below(std::uint32_t m) { return m <= 1 ? 0u : raw() % m; }

 private:
  std::mt19937 gen_;
};

}  // namespace netrobust
