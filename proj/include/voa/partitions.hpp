#pragma once

#include <functional>
#include <vector>

namespace voa {

// All partitions of total into parts <= max_part, weakly decreasing.
inline void for_each_partition(long total, long max_part,
                               const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long cap) {
        if (rem == 0) {
            fn(cur);
            return;
        }
        for (long p = std::min(cap, rem); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(total, max_part);
}

inline std::vector<std::vector<long>> partitions_of(long total, long max_part = -1) {
    if (max_part < 0) max_part = total;
    std::vector<std::vector<long>> out;
    for_each_partition(total, max_part, [&](const std::vector<long>& p) { out.push_back(p); });
    return out;
}

inline long partition_count(long n) {
    if (n < 0) return 0;
    // Euler recurrence with pentagonal numbers.
    static std::vector<long> cache{1};
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        long total = 0;
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sgn = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sgn * cache[m - g1];
            if (g2 <= m) total += sgn * cache[m - g2];
        }
        cache.push_back(total);
    }
    return cache[n];
}

}  // namespace voa
