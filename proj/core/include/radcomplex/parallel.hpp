#pragma once

#include <cstdint>
#include <functional>

namespace radcomplex {

// Thread cap from RADCOMPLEX_THREADS (0 or unset = hardware concurrency).
// Read once per process.
int thread_budget();

// Splits [0, count) into contiguous chunks and runs chunk_fn(begin, end)
// on up to `threads` workers (-1 = thread_budget()). Results must be
// written to disjoint, preallocated storage; whatever the thread count,
// the same indices compute the same values, so callers that reduce in
// index order are scheduling-independent.
void parallel_for_chunks(
    std::int64_t count,
    const std::function<void(std::int64_t, std::int64_t)>& chunk_fn,
    int threads = -1);

// Compensated (Kahan) accumulator for long deterministic reductions.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - comp_;
    const double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace radcomplex
