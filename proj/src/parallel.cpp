#include "mforge/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "mforge/errors.hpp"

namespace mforge {

WorkerPool::WorkerPool(unsigned workers) : workers_(workers) {
  if (workers_ == 0) throw ConfigError("worker count must be >= 1");
}

void WorkerPool::run(std::size_t count,
                     const std::function<void(std::size_t)>& task) const {
  if (count == 0) return;
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(workers_, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
}

unsigned WorkerPool::default_workers() {
  const char* env = std::getenv("MFORGE_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc{} && end == text.data() + text.size() && value >= 1) return value;
  throw ConfigError(std::string("MFORGE_THREADS must be a positive integer, got '") +
                    env + "'");
}

}  // namespace mforge
