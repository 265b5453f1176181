#pragma once

#include "qseries/named_series.hpp"
#include "qseries/partitions.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace qseries {

enum class Status { pass, fail };

/// First coefficient at which the two sides disagree, rendered in the
/// canonical form of the ring the comparison ran in.
struct FailureWitness {
    int power = 0;
    std::string expected;
    std::string actual;
    std::string ring;

    friend bool operator==(const FailureWitness&, const FailureWitness&) = default;
};

struct VerificationReport {
    std::string identity;
    int order = 0;
    Status status = Status::pass;
    std::optional<FailureWitness> witness;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const { return status == Status::pass; }
};

/// Equal up to elapsed time.
bool same_outcome(const VerificationReport& x, const VerificationReport& y);

/// A single additive change applied to one right-hand-side coefficient
/// (after projection). Used to show the verifiers can fail.
struct RhsPerturbation {
    int power = 0;
    LaurentPoly delta;
};

/// Crank generating function against enumerated M(m,n), 0 <= n <= N.
VerificationReport verify_crank_gf(int N);
VerificationReport verify_crank_gf_against(const StatTable& table, int N);

/// Rank generating function against enumerated N(m,n), 0 <= n <= N.
VerificationReport verify_rank_gf(int N);
VerificationReport verify_rank_gf_against(const StatTable& table, int N);

/// Pentagonal-recurrence p(n) against enumeration counts for n <= n_max.
VerificationReport verify_partition_numbers(int n_max);

/// t | p(tn + r) for 0 <= n <= n_max; (t,r) in {(5,4), (7,5), (11,6)}.
VerificationReport verify_congruence(int t, int r, int n_max);

/// Every residue class k mod t of the statistic holds exactly p(tn+r)/t
/// partitions of tn+r, 0 <= n <= n_max. The rank is only accepted for
/// t = 5 and 7; the crank for 5, 7 and 11.
VerificationReport verify_equidistribution(Statistic statistic, int t, int r, int n_max);

/// Right-hand sides of the dissection identities with q replaced by q^m
/// (m = 2, 3, 5) so every exponent is integral, through q^N.
QuotientSeries dissection2_rhs(int N);
QuotientSeries dissection3_rhs(int N);
QuotientSeries dissection5_rhs(int N, int n_root);

/// crank_gf(N) with a -> a^n_root, projected into Z[a]/(modulus).
QuotientSeries projected_crank_gf(int N, const ModulusPtr& modulus, int n_root = 1);

/// Crank generating function modulo a^4 + 1 against dissection2_rhs. N even.
VerificationReport verify_2_dissection(int N, const std::optional<RhsPerturbation>& perturb = {});
/// Modulo a^6 + a^3 + 1 against dissection3_rhs. N divisible by 3.
VerificationReport verify_3_dissection(int N, const std::optional<RhsPerturbation>& perturb = {});
/// In Z[a]/(a^4+a^3+a^2+a+1) with a -> a^n_root on the crank side.
/// N divisible by 5, n_root in 1..4.
VerificationReport verify_5_dissection(int N, int n_root,
                                       const std::optional<RhsPerturbation>& perturb = {});

/// The q^4 residue class vanishes from the 5-dissection: on the right-hand
/// side and on the projected crank series for every root, and at a = 1 the
/// corresponding partition counts are all divisible by 5.
VerificationReport verify_component4_vanishing(int N);

/// Coefficients of q^0..q^N of the crank generating function.
std::vector<LaurentPoly> fa_coefficients(int N = 20);

} // namespace qseries
