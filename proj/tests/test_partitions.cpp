#include "oracles.hpp"

#include "qseries/errors.hpp"
#include "qseries/partitions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

using namespace qseries;

namespace {

LaurentPoly a(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

std::vector<std::vector<int>> parts_of(const std::vector<Partition>& ps)
{
    std::vector<std::vector<int>> out;
    for (const auto& p : ps)
        out.push_back(p.parts());
    return out;
}

} // namespace

TEST_CASE("partition validation")
{
    CHECK_THROWS_AS(Partition({1, 2}), UsageError);
    CHECK_THROWS_AS(Partition({3, 0}), UsageError);
    CHECK_THROWS_AS(Partition({-1}), UsageError);
    const Partition p({3, 3, 1});
    CHECK(p.weight() == 7);
    CHECK(p.largest_part() == 3);
    CHECK(p.number_of_parts() == 3);
    CHECK(p.to_string() == "{3,3,1}");
}

TEST_CASE("enumeration")
{
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(parts_of(enumerate_partitions(4)) ==
          std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(9).size() == 30);
    CHECK_THROWS_AS(enumerate_partitions(-1), UsageError);

    for (int n = 0; n <= 40; ++n) {
        long count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        REQUIRE(p_of_n(n) == count);
    }
    // Same set as the recursive oracle, in lexicographically descending order.
    for (int n = 1; n <= 18; ++n) {
        const auto ours = parts_of(enumerate_partitions(n));
        auto theirs = oracle::partitions(n);
        std::sort(theirs.begin(), theirs.end(), std::greater<>());
        REQUIRE(ours == theirs);
    }
}

TEST_CASE("partition numbers")
{
    CHECK(p_of_n(0) == 1);
    CHECK(p_of_n(4) == 5);
    CHECK(p_of_n(19) == 490);
    CHECK(BigInt(p_of_n(19) % 5) == 0);
    CHECK(p_of_n(100) == BigInt("190569292"));
    CHECK(p_of_n(200) == BigInt("3972999029388"));
    CHECK_THROWS_AS(p_of_n(-1), UsageError);
}

TEST_CASE("rank")
{
    CHECK(rank(Partition({3, 1})) == 1);
    CHECK(rank(Partition({1})) == 0);
    std::multiset<int> ranks;
    for (const auto& p : enumerate_partitions(4))
        ranks.insert(rank(p));
    CHECK(ranks == std::multiset<int>{3, 1, 0, -1, -3});
    CHECK_THROWS_AS(rank(Partition()), DomainError);
}

TEST_CASE("crank")
{
    CHECK(crank(Partition({1})) == -1);
    CHECK(crank(Partition({4})) == 4);
    std::vector<int> cranks;
    std::set<int> residues;
    for (const auto& p : enumerate_partitions(4)) {
        cranks.push_back(crank(p));
        residues.insert(((crank(p) % 5) + 5) % 5);
    }
    CHECK(cranks == std::vector<int>{4, 0, 2, -2, -4});
    CHECK(residues == std::set<int>{0, 1, 2, 3, 4});
    CHECK(crank(Partition({5, 2, 1, 1})) == -1); // two ones, one part above 2
    CHECK_THROWS_AS(crank(Partition()), DomainError);
}

TEST_CASE("stat tables")
{
    const auto crank_table = build_stat_table(Statistic::crank, 30);
    CHECK(crank_table.row(0) == LaurentPoly(1L));
    CHECK(crank_table.row(1) == a(-1) - 1 + a(1));
    CHECK(crank_table.row(2) == a(-2) + a(2));
    CHECK(combinatorial_row(Statistic::crank, 1) == a(-1));

    const auto rank_table = build_stat_table(Statistic::rank, 30);
    CHECK(rank_table.row(4) == a(-3) + a(-1) + 1 + a(1) + a(3));

    const auto p = partition_numbers(30);
    for (const auto* table : {&crank_table, &rank_table}) {
        for (int n = 1; n <= 30; ++n) {
            const auto& row = table->row(n);
            REQUIRE(row.sum_of_coefficients() == p[n]);
            REQUIRE(row.is_palindromic());
            REQUIRE(row.min_exponent() >= -n);
            REQUIRE(row.max_exponent() <= n);
            for (int t : {2, 5, 7, 11}) {
                BigInt total = 0;
                for (int k = 0; k < t; ++k)
                    total += table->count_mod(k, t, n);
                REQUIRE(total == p[n]);
            }
        }
    }
    for (int n = 2; n <= 16; ++n)
        for (const auto& [m, count] : oracle::stat_counts(n, oracle::crank))
            REQUIRE(crank_table.count(m, n) == count);
}

TEST_CASE("stat_mod")
{
    const auto crank_table = build_stat_table(Statistic::crank, 6);
    const auto rank_table = build_stat_table(Statistic::rank, 6);
    for (int k = 0; k < 5; ++k) {
        CHECK(crank_table.count_mod(k, 5, 4) == 1);
        CHECK(rank_table.count_mod(k, 5, 4) == 1);
    }
    CHECK_THROWS_AS(crank_table.count_mod(5, 5, 4), UsageError);
    CHECK_THROWS_AS(crank_table.count_mod(-1, 5, 4), UsageError);
    CHECK_THROWS_AS(crank_table.count_mod(0, 5, 7), UsageError);
    CHECK_THROWS_AS(crank_table.count_mod(0, 0, 4), UsageError);
}

TEST_CASE("table build is independent of the worker count")
{
    const auto parallel = build_stat_table(Statistic::crank, 35);
    setenv("QSERIES_MAX_THREADS", "1", 1);
    CHECK(worker_limit() == 1);
    const auto serial = build_stat_table(Statistic::crank, 35);
    unsetenv("QSERIES_MAX_THREADS");
    CHECK(parallel.rows() == serial.rows());
}
