#pragma once

#include <cstdint>

namespace ppt {

// Visits every c-subset of {0..n-1} as a bitmask in increasing numeric order
// (Gosper's hack). The visitor returns true to stop early; the function
// returns true if it was stopped.
template <class F>
bool for_each_subset_of_size(int n, int c, F&& f) {
    if (c < 0 || c > n) return false;
    if (c == 0) return f(std::uint64_t{0});
    std::uint64_t mask = (c >= 64) ? ~0ULL : (1ULL << c) - 1;
    const std::uint64_t last = mask << (n - c);
    for (;;) {
        if (f(mask)) return true;
        if (mask == last) return false;
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        mask = (((mask ^ ripple) >> 2) / low) | ripple;
    }
}

}  // namespace ppt
