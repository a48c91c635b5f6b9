#ifndef AFFINEJT_PARALLEL_HPP
#define AFFINEJT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace affinejt {

// Process-wide worker count: CLI flag, then AFFINEJT_THREADS, then hardware.
int worker_count();
void set_worker_count(int n);

// Run fn(i) for i in [0, count) across workers. Results are merged in index
// order by the caller; exact arithmetic makes the reduction order-free.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// Chunked variant: fn(begin, end) on disjoint ranges covering [0, count).
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     std::size_t* nchunks_out = nullptr);

}  // namespace affinejt

#endif
