#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// they check: partitions come from a plain recursion, products are
// expanded factor by factor, Laurent products term by term.

#include "qseries/bigint.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using qseries::BigInt;

/// All partitions of n with parts <= max_part, by recursion on the largest part.
inline void partitions_rec(int n, int max_part, std::vector<int>& prefix,
                           const std::function<void(const std::vector<int>&)>& visit)
{
    if (n == 0) {
        visit(prefix);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(n - part, part, prefix, visit);
        prefix.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

inline long count_partitions(int n) { return static_cast<long>(partitions(n).size()); }

/// Crank straight from the definition, written independently.
inline int crank(const std::vector<int>& p)
{
    int ones = 0;
    for (int x : p)
        ones += x == 1;
    if (ones == 0)
        return p.front();
    int larger = 0;
    for (int x : p)
        larger += x > ones;
    return larger - ones;
}

inline int rank(const std::vector<int>& p) { return p.front() - static_cast<int>(p.size()); }

/// statistic value -> count over partitions of n.
inline std::map<int, long> stat_counts(int n, int (*stat)(const std::vector<int>&))
{
    std::map<int, long> counts;
    for (const auto& p : partitions(n))
        ++counts[stat(p)];
    return counts;
}

/// prod_{k=1}^{N} (1 - q^k) expanded factor by factor, through q^N.
inline std::vector<BigInt> naive_euler(int N)
{
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (int k = 1; k <= N; ++k)
        for (int n = N; n >= k; --n)
            c[n] -= c[n - k];
    return c;
}

/// Bilateral theta sum over a generous index window.
inline std::vector<BigInt> theta_direct(int r, int s, int N)
{
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1);
    for (long n = -200; n <= 200; ++n) {
        const long e = r * (n * (n + 1) / 2) + s * (n * (n - 1) / 2);
        if (e >= 0 && e <= N)
            c[e] += (n % 2 == 0) ? 1 : -1;
    }
    return c;
}

/// Laurent product by brute-force term expansion over exponent -> coefficient maps.
inline std::map<int, BigInt> laurent_product(const std::map<int, BigInt>& x, const std::map<int, BigInt>& y)
{
    std::map<int, BigInt> out;
    for (const auto& [ex, cx] : x)
        for (const auto& [ey, cy] : y)
            out[ex + ey] += cx * cy;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace oracle
