#include "radcomplex/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace radcomplex {

int thread_budget() {
  static const int budget = [] {
    int n = 0;
    if (const char* env = std::getenv("RADCOMPLEX_THREADS")) {
      n = std::atoi(env);
    }
    if (n <= 0) {
      n = static_cast<int>(std::thread::hardware_concurrency());
    }
    return std::max(1, n);
  }();
  return budget;
}

void parallel_for_chunks(
    std::int64_t count,
    const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
    int threads) {
  if (count <= 0) return;
  int t = threads > 0 ? threads : thread_budget();
  t = static_cast<int>(std::min<std::int64_t>(t, count));
  if (t == 1) {
    chunk_fn(0, count);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(t) - 1);
  for (int w = 0; w < t; ++w) {
    const std::int64_t begin = count * w / t;
    const std::int64_t end = count * (w + 1) / t;
    if (w + 1 == t) {
      chunk_fn(begin, end);
    } else {
      workers.emplace_back(chunk_fn, begin, end);
    }
  }
  for (auto& worker : workers) worker.join();
}

}  // namespace radcomplex
