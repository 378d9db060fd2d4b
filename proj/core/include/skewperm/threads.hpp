#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace skewperm {

// Worker count for internal parallelism: the programmatic override if
// set, else the SKEWPERM_THREADS environment variable, else the hardware
// concurrency (at least 1). Results never depend on this value, only
// wall time does.
int thread_budget();

// Overrides (or, with nullopt, un-overrides) the thread budget for this
// process; meant for tests that pin determinism across budgets.
void set_thread_budget_override(std::optional<int> threads);

// Runs fn(worker, lo, hi) over a partition of [begin, end) into
// contiguous chunks, one worker thread per chunk. fn must confine its
// writes to per-worker state. Falls back to a plain call on a single
// chunk when the budget is 1 or the range is small.
void parallel_ranges(std::uint64_t begin, std::uint64_t end,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace skewperm
