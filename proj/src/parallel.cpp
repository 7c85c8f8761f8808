#include "geomano/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace geomano {

namespace {
std::atomic<int> g_max_threads{1};
}

void set_max_threads(int n) {
    g_max_threads.store(n < 1 ? 1 : n);
}

int max_threads() {
    return g_max_threads.load();
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (n <= 0) return;
    const int nt = static_cast<int>(std::min<std::int64_t>(g_max_threads.load(), n));
    if (nt <= 1) {
        body(0, n);
        return;
    }
    // Static contiguous split; remainder spread over the first ranges.
    const std::int64_t base = n / nt;
    const std::int64_t rem = n % nt;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(nt - 1));
    std::int64_t begin = 0;
    for (int t = 0; t < nt; ++t) {
        const std::int64_t len = base + (t < rem ? 1 : 0);
        const std::int64_t end = begin + len;
        if (t == nt - 1) {
            body(begin, end);
        } else {
            workers.emplace_back([&body, begin, end] { body(begin, end); });
        }
        begin = end;
    }
    for (auto& w : workers) w.join();
}

} // namespace geomano
