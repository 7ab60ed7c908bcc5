#pragma once

#include <cstddef>
#include <functional>

namespace mforge {

/// Fixed-size worker pool handed to bulk operations. Tasks are indexed
/// 0..count-1 and may execute in any order; callers merge results by index
/// so output never depends on the worker count.
class WorkerPool {
 public:
  explicit WorkerPool(unsigned workers = 1);

  unsigned size() const noexcept { return workers_; }

  /// Runs task(i) for every i in [0, count). The first exception thrown by
  /// any task is rethrown on the calling thread after all workers stop.
  void run(std::size_t count, const std::function<void(std::size_t)>& task) const;

  /// Worker count from MFORGE_THREADS, falling back to 1.
  static unsigned default_workers();

 private:
  unsigned workers_;
};

}  // namespace mforge
