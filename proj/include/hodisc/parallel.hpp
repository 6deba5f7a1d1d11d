#ifndef HODISC_PARALLEL_HPP
#define HODISC_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace hodisc {

// Worker count used by the chunked loops below. Defaults to 1 (fully serial);
// the CLI raises it via --threads.
std::size_t worker_count();
void set_worker_count(std::size_t n);

// Splits [0, n_items) into fixed chunks and runs body(chunk_index, begin, end)
// on a small pool. Chunk boundaries depend only on n_items, so callers that
// accumulate into per-chunk slots and reduce them in chunk order get
// bit-identical results for any worker count.
void parallel_chunks(std::size_t n_items,
                     std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace hodisc

#endif
