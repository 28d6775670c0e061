// Deterministic data parallelism: a fixed static partition of an index range
// over a configurable worker count. Results must be written to disjoint
// slots, so the outcome is identical for any worker count.

#ifndef NCDISC_PARALLEL_HPP
#define NCDISC_PARALLEL_HPP

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ncdisc {

int max_workers();
void set_max_workers(int n); // n >= 1

void parallel_for_impl(long begin, long end,
                       const std::function<void(long)>& body);

template <class F>
void parallel_for(long begin, long end, F&& body) {
    parallel_for_impl(begin, end, std::function<void(long)>(std::forward<F>(body)));
}

} // namespace ncdisc

#endif
