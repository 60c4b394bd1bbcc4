#include "netrobust/runtime.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef NETROBUST_OPENMP
#include <omp.h>
#endif

namespace netrobust {

Deadline Deadline::after_ms(std::int64_t ms) {
  Deadline d;
  d.enabled_ = true;
  d.end_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  return d;
}

bool Deadline::expired() const {
  return enabled_ && std::chrono::steady_clock::now() >= end_;
}

void Deadline::check(const char* what) const {
  if (expired()) {
    throw BudgetExceeded(std::string("time budget exhausted during ") + what);
  }
}

int worker_count() {
  if (const char* env = std::getenv("NETROBUST_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<int>(v);
    return 1;
  }
#ifdef NETROBUST_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::int64_t default_budget_ms() {
  if (const char* env = std::getenv("NETROBUST_BUDGET_MS")) {
    long long v = std::strtoll(env, nullptr, 10);
    if (v >= 1) return v;
  }
  return 600000;
}

std::uint64_t binom_capped(std::int64_t n, std::int64_t k, std::uint64_t cap) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

Combinations::Combinations(int n, int k) : n_(n), k_(k) {
  if (k < 0 || n < 0) throw std::invalid_argument("Combinations: negative size");
  done_ = k > n;
  idx_.resize(static_cast<std::size_t>(std::max(k, 0)));
}

Combinations::Combinations(int n, int k, std::vector<int> start) : Combinations(n, k) {
  if (static_cast<int>(start.size()) != k)
    throw std::invalid_argument("Combinations: start size mismatch");
  idx_ = std::move(start);
  started_ = true;
}

bool Combinations::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    for (int i = 0; i < k_; ++i) idx_[static_cast<std::size_t>(i)] = i;
    return true;
  }
  int i = k_ - 1;
  while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return false;
  }
  ++idx_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k_; ++j) {
    idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  int x = 0;
  for (int slot = k; slot >= 1; --slot) {
    // Walk the first element forward while the block of combinations that
    // start with it is entirely below the target rank.
    for (;;) {
      std::uint64_t block = binom_capped(n - x - 1, slot - 1, UINT64_MAX - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
      if (x > n - slot) throw std::invalid_argument("unrank_combination: rank out of range");
    }
    out.push_back(x);
    ++x;
  }
  return out;
}

}  // namespace netrobust
