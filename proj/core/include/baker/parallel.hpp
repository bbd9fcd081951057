#pragma once

#include <cstddef>
#include <functional>

namespace baker {

/// Worker cap for the parallel kernels. 0 restores the default, which is the
/// value of BAKER_THREADS if set, else std::thread::hardware_concurrency().
void set_thread_limit(unsigned threads) noexcept;
unsigned thread_limit() noexcept;

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunk boundaries
/// depend only on n and the worker count; callers must write results by index
/// so the output does not depend on scheduling.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t)>& body,
                     std::size_t min_chunk = 4096);

}  // namespace baker
