#pragma once

#include <cstdint>
#include <functional>

namespace geomano {

// Worker cap for parallel_for. Default 1 (fully sequential); the CLI's
// --threads flag raises it.
void set_max_threads(int n);
int max_threads();

// Splits [0, n) into one contiguous range per worker and runs body(begin, end)
// on each. Partitioning depends only on n and the configured thread count, and
// callers write disjoint outputs, so results are reproducible for a fixed
// thread count (and bit-identical for any count when no reduction is involved).
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body);

} // namespace geomano
