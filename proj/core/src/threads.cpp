#include "skewperm/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace skewperm {

namespace {

std::mutex budget_mutex;
std::optional<int> budget_override;

int env_budget() {
  const char* raw = std::getenv("SKEWPERM_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1 || value > 1024)
    throw std::invalid_argument("SKEWPERM_THREADS must be an integer in [1, 1024]");
  return static_cast<int>(value);
}

}  // namespace

int thread_budget() {
  {
    std::lock_guard<std::mutex> lock(budget_mutex);
    if (budget_override) return *budget_override;
  }
  if (int env = env_budget(); env > 0) return env;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_budget_override(std::optional<int> threads) {
  if (threads && *threads < 1)
    throw std::invalid_argument("thread budget must be at least 1");
  std::lock_guard<std::mutex> lock(budget_mutex);
  budget_override = threads;
}

void parallel_ranges(std::uint64_t begin, std::uint64_t end,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (begin >= end) return;
  const std::uint64_t total = end - begin;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_budget()), total));
  if (workers <= 1) {
    fn(0, begin, end);
    return;
  }
  const std::uint64_t chunk = total / workers;
  const std::uint64_t extra = total % workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::uint64_t lo = begin;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    pool.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
    lo = hi;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace skewperm
