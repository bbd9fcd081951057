#include "baker/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace baker {
namespace {

std::atomic<unsigned> g_thread_limit{0};

unsigned default_threads() noexcept {
  if (const char* env = std::getenv("BAKER_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

void set_thread_limit(unsigned threads) noexcept { g_thread_limit.store(threads); }

unsigned thread_limit() noexcept {
  const unsigned limit = g_thread_limit.load();
  return limit == 0 ? default_threads() : limit;
}

void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body,
                     std::size_t min_chunk) {
  if (n == 0) return;
  const std::size_t max_workers = (n + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1);
  const std::size_t workers = std::clamp<std::size_t>(max_workers, 1, thread_limit());
  if (workers == 1) {
    body(0, n);
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace baker
