#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace bfx {

// Chunked index-parallel loop. Workers write results by index, so output is
// identical for every job count.
template <typename Fn>
void parallel_for(size_t count, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const size_t chunk = (count + jobs - 1) / jobs;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
        const size_t begin = w * chunk;
        const size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([begin, end, &fn] {
            for (size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace bfx
