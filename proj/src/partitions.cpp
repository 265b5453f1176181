#include "qseries/partitions.hpp"

#include "qseries/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace qseries {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

std::string Partition::to_string() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "}";
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit)
{
    if (n < 0)
        throw UsageError("cannot partition a negative integer");
    if (n == 0) {
        visit({});
        return;
    }
    std::vector<int> parts{n};
    parts.reserve(static_cast<std::size_t>(n));
    for (;;) {
        visit(parts);
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty())
            return;
        // Decrement the last part > 1 and refill greedily with the new value.
        const int v = --parts.back();
        int rest = ones + 1;
        while (rest >= v) {
            parts.push_back(v);
            rest -= v;
        }
        if (rest > 0)
            parts.push_back(rest);
    }
}

std::vector<Partition> enumerate_partitions(int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const int> p) {
        out.emplace_back(std::vector<int>(p.begin(), p.end()));
    });
    return out;
}

std::vector<BigInt> partition_numbers(int n_max)
{
    if (n_max < 0)
        throw UsageError("partition_numbers needs n_max >= 0");
    std::vector<BigInt> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigInt s = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (g1 > n)
                break;
            const long g2 = k * (3 * k + 1) / 2;
            BigInt term = p[n - g1];
            if (g2 <= n)
                term += p[n - g2];
            if (k % 2 == 1)
                s += term;
            else
                s -= term;
        }
        p[n] = s;
    }
    return p;
}

BigInt p_of_n(int n)
{
    if (n < 0)
        throw UsageError("p(n) needs n >= 0");
    return partition_numbers(n).back();
}

int rank_of_parts(std::span<const int> parts)
{
    if (parts.empty())
        throw DomainError("rank of the empty partition is undefined");
    return parts.front() - static_cast<int>(parts.size());
}

int crank_of_parts(std::span<const int> parts)
{
    if (parts.empty())
        throw DomainError("crank of the empty partition is undefined");
    const auto ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (ones == 0)
        return parts.front();
    const auto larger = static_cast<int>(
        std::count_if(parts.begin(), parts.end(), [ones](int x) { return x > ones; }));
    return larger - ones;
}

int rank(const Partition& pi) { return rank_of_parts(pi.parts()); }
int crank(const Partition& pi) { return crank_of_parts(pi.parts()); }

std::string to_string(Statistic s) { return s == Statistic::rank ? "rank" : "crank"; }

StatTable::StatTable(Statistic kind, std::vector<LaurentPoly> rows) : kind_(kind), rows_(std::move(rows))
{
    if (rows_.empty())
        throw UsageError("a statistic table needs at least row 0");
}

const LaurentPoly& StatTable::row(int n) const
{
    if (n < 0 || n > n_max())
        throw UsageError("row " + std::to_string(n) + " outside table range 0.." + std::to_string(n_max()));
    return rows_[static_cast<std::size_t>(n)];
}

BigInt StatTable::count_mod(int k, int t, int n) const
{
    if (t < 1)
        throw UsageError("modulus t must be >= 1");
    if (k < 0 || k >= t)
        throw UsageError("residue class k must satisfy 0 <= k < t");
    BigInt s = 0;
    for (const auto& [m, c] : row(n).terms())
        if (((m % t) + t) % t == k)
            s += c;
    return s;
}

LaurentPoly combinatorial_row(Statistic kind, int n)
{
    if (n == 0)
        return 1L;
    std::vector<long> counts(2 * static_cast<std::size_t>(n) + 1, 0);
    for_each_partition(n, [&](std::span<const int> p) {
        const int m = kind == Statistic::rank ? rank_of_parts(p) : crank_of_parts(p);
        ++counts[static_cast<std::size_t>(m + n)];
    });
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0)
            terms.emplace_back(static_cast<int>(i) - n, BigInt(counts[i]));
    return LaurentPoly::from_terms(std::move(terms));
}

unsigned worker_limit()
{
    if (const char* env = std::getenv("QSERIES_MAX_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

StatTable build_stat_table(Statistic kind, int n_max)
{
    if (n_max < 0)
        throw UsageError("n_max must be >= 0");
    std::vector<LaurentPoly> rows(static_cast<std::size_t>(n_max) + 1);
    rows[0] = 1L;
    if (kind == Statistic::crank && n_max >= 1)
        rows[1] = LaurentPoly::from_terms({{-1, 1}, {0, -1}, {1, 1}});

    const int first = kind == Statistic::crank ? 2 : 1;
    // Largest rows first so the expensive shards start early.
    std::atomic<int> next{n_max};
    auto work = [&] {
        for (int n = next--; n >= first; n = next--)
            rows[static_cast<std::size_t>(n)] = combinatorial_row(kind, n);
    };
    const unsigned workers = std::min<unsigned>(worker_limit(), static_cast<unsigned>(std::max(1, n_max)));
    {
        std::vector<std::jthread> pool;
        for (unsigned i = 1; i < workers; ++i)
            pool.emplace_back(work);
        work();
    }
    return StatTable(kind, std::move(rows));
}

} // namespace qseries
