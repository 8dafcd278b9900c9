#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace actlab {

// Applies fn to 0..count-1 on up to n_threads workers and returns the results
// in index order, so parallel runs produce the same output as sequential ones.
template <typename R>
std::vector<R> parallel_map(int count, const std::function<R(int)>& fn,
                            int n_threads) {
  std::vector<R> out(static_cast<size_t>(count));
  if (n_threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) {
      out[static_cast<size_t>(i)] = fn(i);
    }
    return out;
  }
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      out[static_cast<size_t>(i)] = fn(i);
    }
  };
  int spawn = std::min(n_threads, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  return out;
}

// Percent-encodes everything outside [A-Za-z0-9._~-], for the tsv witness
// column where tabs and newlines would break the row structure.
std::string percent_encode(const std::string& s);

std::string join(const std::vector<int>& xs, const std::string& sep);

}  // namespace actlab
