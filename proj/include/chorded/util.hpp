#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace chorded {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; line is 1-based.
struct parse_error : error {
  int line;
  parse_error(const std::string& msg, int line_no)
      : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// A documented precondition of an operation was violated.
struct precondition_error : error {
  using error::error;
};

// A search or sweep exceeded its configured cap.  Carries the blocking
// kernel dimension when that is what tripped the cap (-1 otherwise).
struct infeasible_error : error {
  int kernel_dim;
  explicit infeasible_error(const std::string& msg, int kdim = -1)
      : error(msg), kernel_dim(kdim) {}
};

// Runs fn(begin, end) over [0, count) split into contiguous chunks, one per
// worker.  Results must be written to pre-sized slots so the caller's
// aggregation is independent of scheduling.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  if (threads < 1) threads = 1;
  std::size_t n_chunks = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (n_chunks <= 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(n_chunks);
  std::size_t chunk = (count + n_chunks - 1) / n_chunks;
  for (std::size_t c = 0; c < n_chunks; ++c) {
    std::size_t lo = c * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& t : pool) t.join();
}

// Visits every k-subset of `items`, passing the chosen elements.
template <typename T, typename Fn>
void for_each_subset(const std::vector<T>& items, int k, Fn&& fn) {
  int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = items[idx[i]];
    fn(chosen);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace chorded
