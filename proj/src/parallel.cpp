#include "affinejt/parallel.hpp"

#include "affinejt/report.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace affinejt {

namespace {
int g_workers = 0;  // 0 = not yet resolved
}

int worker_count() {
    if (g_workers > 0) return g_workers;
    if (const char* env = std::getenv("AFFINEJT_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return g_workers = n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return g_workers = hw > 0 ? static_cast<int>(hw) : 1;
}

void set_worker_count(int n) {
    if (n > 0) g_workers = n;
}

void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                     std::size_t* nchunks_out) {
    std::size_t workers = static_cast<std::size_t>(worker_count());
    if (workers <= 1 || count <= 1) {
        if (nchunks_out) *nchunks_out = count == 0 ? 0 : 1;
        if (count > 0) fn(0, 0, count);
        return;
    }
    std::size_t nchunks = std::min(workers, count);
    if (nchunks_out) *nchunks_out = nchunks;
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t begin = count * c / nchunks;
        std::size_t end = count * (c + 1) / nchunks;
        pool.emplace_back([&, c, begin, end] {
            try {
                fn(c, begin, end);
            } catch (...) {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed) std::rethrow_exception(err);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    parallel_chunks(count, [&](std::size_t, std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) fn(i);
    });
}

const char* to_string(CheckReport::Status s) {
    switch (s) {
        case CheckReport::Status::kPass: return "pass";
        case CheckReport::Status::kFail: return "fail";
        case CheckReport::Status::kSkipped: return "skipped";
    }
    return "?";
}

}  // namespace affinejt
