#ifndef POSECLONE_PARALLEL_HPP_
#define POSECLONE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace poseclone {

/// Worker thread budget. The POSECLONE_THREADS environment variable caps it;
/// unset, 0, or unparsable means auto (hardware concurrency).
std::size_t worker_count();

/// Runs fn(begin, end) over disjoint contiguous chunks of [0, count).
/// Chunk boundaries are a scheduling artifact only: callers must write
/// disjoint per-index outputs, or reduce per-index partials in a fixed order
/// afterwards, so results do not depend on the worker count.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

/// Runs fn(i) for every i in [0, count) across the worker pool.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn);

}  // namespace poseclone

#endif  // POSECLONE_PARALLEL_HPP_
