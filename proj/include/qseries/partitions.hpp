#pragma once

#include "qseries/bigint.hpp"
#include "qseries/laurent_poly.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qseries {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws UsageError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int weight() const { return weight_; }
    int largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int number_of_parts() const { return static_cast<int>(parts_.size()); }

    friend bool operator==(const Partition&, const Partition&) = default;
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Visit every partition of n once, in lexicographically descending order
/// ({n} first, 1+1+...+1 last). The span is only valid during the call.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);

std::vector<Partition> enumerate_partitions(int n);

/// p(0..n_max) by Euler's pentagonal recurrence.
std::vector<BigInt> partition_numbers(int n_max);
BigInt p_of_n(int n);

/// Largest part minus number of parts. Throws DomainError on the empty partition.
int rank(const Partition& pi);
int rank_of_parts(std::span<const int> parts);

/// Largest part if there are no ones; otherwise (parts larger than the
/// number of ones) minus (number of ones).
int crank(const Partition& pi);
int crank_of_parts(std::span<const int> parts);

enum class Statistic { rank, crank };

std::string to_string(Statistic s);

/// Counts N(m,n) or M(m,n) for 0 <= n <= n_max. Row n is stored as the
/// Laurent polynomial sum_m counts(m,n) a^m, so it compares directly with
/// generating-function coefficients.
class StatTable {
public:
    StatTable(Statistic kind, std::vector<LaurentPoly> rows);

    Statistic kind() const { return kind_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<LaurentPoly>& rows() const { return rows_; }
    const LaurentPoly& row(int n) const;
    BigInt count(int m, int n) const { return row(n).coefficient(m); }

    /// Sum of counts(m,n) over m congruent to k modulo t.
    BigInt count_mod(int k, int t, int n) const;

private:
    Statistic kind_;
    std::vector<LaurentPoly> rows_;
};

/// Row n straight from enumeration. For the crank at n = 1 this is a^-1,
/// which differs from the generating-function row a - 1 + a^-1.
LaurentPoly combinatorial_row(Statistic kind, int n);

/// Rows 0..n_max. Row 0 is 1 for both statistics; the crank row 1 is the
/// generating-function convention M(-1,1) = M(1,1) = 1, M(0,1) = -1.
/// Every other row is enumerated. Rows are built in parallel, capped by
/// worker_limit().
StatTable build_stat_table(Statistic kind, int n_max);

/// Worker thread cap: QSERIES_MAX_THREADS if set and positive, otherwise
/// the hardware concurrency.
unsigned worker_limit();

} // namespace qseries
