#include "hodisc/parallel.hpp"

#include <algorithm>

namespace hodisc {

namespace {
std::size_t g_workers = 1;
}

std::size_t worker_count() { return g_workers; }

void set_worker_count(std::size_t n) { g_workers = std::max<std::size_t>(1, n); }

void parallel_chunks(std::size_t n_items,
                     std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (n_items == 0) return;
    chunk_size = std::max<std::size_t>(1, chunk_size);
    std::size_t n_chunks = (n_items + chunk_size - 1) / chunk_size;
    std::size_t workers = std::min(g_workers, n_chunks);

    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c)
            body(c, c * chunk_size, std::min(n_items, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= n_chunks) return;
            body(c, c * chunk_size, std::min(n_items, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace hodisc
