#include "ncdisc/parallel.hpp"

#include <atomic>

namespace ncdisc {

namespace {
std::atomic<int> g_workers{1};
}

int max_workers() { return g_workers.load(); }

void set_max_workers(int n) { g_workers.store(n < 1 ? 1 : n); }

void parallel_for_impl(long begin, long end,
                       const std::function<void(long)>& body) {
    long count = end - begin;
    if (count <= 0) return;
    int workers = max_workers();
    if (workers > count) workers = static_cast<int>(count);
    if (workers <= 1 || count < 2) {
        for (long i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        long lo = begin + count * w / workers;
        long hi = begin + count * (w + 1) / workers;
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (long i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace ncdisc
