#include "qseries/identities.hpp"

#include "qseries/errors.hpp"

#include <utility>

namespace qseries {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
public:
    std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

private:
    Clock::time_point start_ = Clock::now();
};

VerificationReport make_report(std::string identity, int order, const Timer& timer,
                               std::optional<FailureWitness> witness = {})
{
    VerificationReport r;
    r.identity = std::move(identity);
    r.order = order;
    r.status = witness ? Status::fail : Status::pass;
    r.witness = std::move(witness);
    r.elapsed = timer.elapsed();
    return r;
}

template <CoefficientRing R>
std::optional<FailureWitness> compare(const TruncatedSeries<R>& expected, const TruncatedSeries<R>& actual)
{
    const int k = first_difference(expected, actual);
    if (k < 0)
        return std::nullopt;
    const R& ring = expected.ring();
    return FailureWitness{k, ring.format(expected[k]), ring.format(actual[k]), ring.name()};
}

std::optional<FailureWitness> compare_rows(const LaurentSeries& gf, const StatTable& table, int N)
{
    for (int n = 0; n <= N; ++n)
        if (!(gf[n] == table.row(n)))
            return FailureWitness{n, table.row(n).to_string(), gf[n].to_string(), LaurentRing{}.name()};
    return std::nullopt;
}

template <CoefficientRing R>
TruncatedSeries<R> perturbed(TruncatedSeries<R> rhs, const std::optional<RhsPerturbation>& perturb,
                             const std::function<typename R::Element(const LaurentPoly&)>& embed)
{
    if (!perturb)
        return rhs;
    if (perturb->power < 0 || perturb->power > rhs.order())
        throw UsageError("perturbation power outside the truncation order");
    return rhs + TruncatedSeries<R>::monomial(rhs.ring(), rhs.order(), perturb->power, embed(perturb->delta));
}

void require_order(int N, int m, const char* what)
{
    if (N < 0 || N % m != 0)
        throw UsageError(std::string(what) + " needs an order divisible by " + std::to_string(m));
}

int residue_for(int t)
{
    switch (t) {
    case 5: return 4;
    case 7: return 5;
    case 11: return 6;
    default: throw UsageError("no Ramanujan congruence modulo " + std::to_string(t));
    }
}

LaurentPoly a_pow(int k) { return LaurentPoly::monomial(k); }

} // namespace

bool same_outcome(const VerificationReport& x, const VerificationReport& y)
{
    return x.identity == y.identity && x.order == y.order && x.status == y.status && x.witness == y.witness;
}

VerificationReport verify_crank_gf_against(const StatTable& table, int N)
{
    Timer timer;
    if (N < 0 || N > table.n_max())
        throw UsageError("crank table does not reach order " + std::to_string(N));
    if (table.kind() != Statistic::crank)
        throw UsageError("verify_crank_gf needs a crank table");
    return make_report("crank-gf", N, timer, compare_rows(crank_gf(N), table, N));
}

VerificationReport verify_crank_gf(int N)
{
    Timer timer;
    auto r = verify_crank_gf_against(build_stat_table(Statistic::crank, std::max(N, 0)), N);
    r.elapsed = timer.elapsed();
    return r;
}

VerificationReport verify_rank_gf_against(const StatTable& table, int N)
{
    Timer timer;
    if (N < 0 || N > table.n_max())
        throw UsageError("rank table does not reach order " + std::to_string(N));
    if (table.kind() != Statistic::rank)
        throw UsageError("verify_rank_gf needs a rank table");
    return make_report("rank-gf", N, timer, compare_rows(rank_gf(N), table, N));
}

VerificationReport verify_rank_gf(int N)
{
    Timer timer;
    auto r = verify_rank_gf_against(build_stat_table(Statistic::rank, std::max(N, 0)), N);
    r.elapsed = timer.elapsed();
    return r;
}

VerificationReport verify_partition_numbers(int n_max)
{
    Timer timer;
    const auto p = partition_numbers(n_max);
    for (int n = 0; n <= n_max; ++n) {
        long count = 0;
        for_each_partition(n, [&](std::span<const int>) { ++count; });
        if (p[n] != count)
            return make_report("partition-numbers", n_max, timer,
                               FailureWitness{n, std::to_string(count), to_decimal(p[n]), "Z"});
    }
    return make_report("partition-numbers", n_max, timer);
}

VerificationReport verify_congruence(int t, int r, int n_max)
{
    Timer timer;
    if (residue_for(t) != r)
        throw UsageError("unsupported congruence pair (" + std::to_string(t) + "," + std::to_string(r) + ")");
    if (n_max < 0)
        throw UsageError("n_max must be >= 0");
    const std::string name = "congruence-" + std::to_string(t) + "-" + std::to_string(r);
    const auto p = partition_numbers(t * n_max + r);
    for (int n = 0; n <= n_max; ++n) {
        const BigInt& v = p[t * n + r];
        if (BigInt(v % t) != 0)
            return make_report(name, n_max, timer,
                               FailureWitness{t * n + r, "0 mod " + std::to_string(t), to_decimal(v),
                                              "Z/" + std::to_string(t)});
    }
    return make_report(name, n_max, timer);
}

VerificationReport verify_equidistribution(Statistic statistic, int t, int r, int n_max)
{
    Timer timer;
    if (statistic == Statistic::rank && t == 11)
        throw UsageError("the rank does not split p(11n+6) into 11 equal classes");
    if (residue_for(t) != r)
        throw UsageError("unsupported equidistribution pair (" + std::to_string(t) + "," + std::to_string(r) + ")");
    if (n_max < 0)
        throw UsageError("n_max must be >= 0");
    const std::string name = "equidist-" + to_string(statistic) + "-" + std::to_string(t);
    const int top = t * n_max + r;
    const auto table = build_stat_table(statistic, top);
    const auto p = partition_numbers(top);
    for (int n = 0; n <= n_max; ++n) {
        const int w = t * n + r;
        const BigInt share = p[w] / t;
        for (int k = 0; k < t; ++k) {
            const BigInt got = table.count_mod(k, t, w);
            if (got != share || share * t != p[w])
                return make_report(name, n_max, timer,
                                   FailureWitness{w, to_decimal(p[w]) + "/" + std::to_string(t),
                                                  to_decimal(got),
                                                  to_string(statistic) + " class " + std::to_string(k) +
                                                      " mod " + std::to_string(t)});
        }
    }
    return make_report(name, n_max, timer);
}

QuotientSeries projected_crank_gf(int N, const ModulusPtr& modulus, int n_root)
{
    const QuotientRing ring(modulus);
    return map_coefficients(crank_gf(N), ring, [&](const LaurentPoly& c) {
        return ring.project(c.substitute_power(n_root));
    });
}

QuotientSeries dissection2_rhs(int N)
{
    require_order(N, 2, "2-dissection");
    const QuotientRing ring(Modulus::lambda2());
    const int base = N / 2;
    // f(-q^3,-q^5)/(-q^2;q^2)_inf and f(-q,-q^7)/(-q^2;q^2)_inf, then q -> q^2.
    const IntSeries denom_inv = invert(pochhammer_inf(IntegerRing{}, BigInt(-1), 2, 2, base));
    const IntSeries even = theta_neg(3, 5, base) * denom_inv;
    const IntSeries odd = theta_neg(1, 7, base) * denom_inv;
    const auto coeff = ring.project(a_pow(1) - 1 + a_pow(-1));
    return lift(substitute_power(even, 2, N), ring) +
           lift(substitute_power(odd, 2, N), ring).shifted(1).scaled(coeff);
}

QuotientSeries dissection3_rhs(int N)
{
    require_order(N, 3, "3-dissection");
    const QuotientRing ring(Modulus::lambda3());
    const int base = N / 3;
    const IntSeries denom_inv = invert(euler_product_of_power(9, base));
    const IntSeries f27 = theta_neg(2, 7, base);
    const IntSeries f45 = theta_neg(4, 5, base);
    const IntSeries f18 = theta_neg(1, 8, base);
    const IntSeries x0 = f27 * f45 * denom_inv;
    const IntSeries x1 = f18 * f45 * denom_inv;
    const IntSeries x2 = f18 * f27 * denom_inv;
    const auto c1 = ring.project(a_pow(1) - 1 + a_pow(-1));
    const auto c2 = ring.project(a_pow(2) + a_pow(-2));
    return lift(substitute_power(x0, 3, N), ring) +
           lift(substitute_power(x1, 3, N), ring).shifted(1).scaled(c1) +
           lift(substitute_power(x2, 3, N), ring).shifted(2).scaled(c2);
}

QuotientSeries dissection5_rhs(int N, int n_root)
{
    require_order(N, 5, "5-dissection");
    if (n_root < 1 || n_root > 4)
        throw UsageError("n_root must be in 1..4");
    const QuotientRing ring(Modulus::cyclotomic5());
    const int base = N / 5;
    const int n = n_root;
    // f(-q) = (q;q)_inf; f(-q^5)^2 appears in every component.
    const IntSeries f5 = euler_product_of_power(5, base);
    const IntSeries f5_sq = f5 * f5;
    const IntSeries f14 = theta_neg(1, 4, base);
    const IntSeries f23 = theta_neg(2, 3, base);
    const IntSeries f14_inv = invert(f14);
    const IntSeries f23_inv = invert(f23);

    const IntSeries c0 = f23 * f5_sq * f14_inv * f14_inv;
    const IntSeries c1 = f5_sq * f14_inv;
    const IntSeries c2 = f5_sq * f23_inv;
    const IntSeries c3 = f14 * f5_sq * f23_inv * f23_inv;

    // 4cos^2(2n pi/5), 2cos(4n pi/5), 2cos(2n pi/5) with a = exp(2 pi i/5).
    const auto four_cos_sq = ring.project(a_pow(2 * n) + 2 + a_pow(-2 * n));
    const auto two_cos_double = ring.project(a_pow(2 * n) + a_pow(-2 * n));
    const auto two_cos = ring.project(a_pow(n) + a_pow(-n));

    return lift(substitute_power(c0, 5, N), ring) -
           lift(substitute_power(c1, 5, N), ring).shifted(1).scaled(four_cos_sq) +
           lift(substitute_power(c2, 5, N), ring).shifted(2).scaled(two_cos_double) -
           lift(substitute_power(c3, 5, N), ring).shifted(3).scaled(two_cos);
}

VerificationReport verify_2_dissection(int N, const std::optional<RhsPerturbation>& perturb)
{
    Timer timer;
    const auto& m = Modulus::lambda2();
    const QuotientRing ring(m);
    const auto rhs = perturbed<QuotientRing>(dissection2_rhs(N), perturb,
                                             [&](const LaurentPoly& p) { return ring.project(p); });
    return make_report("dissection-2", N, timer, compare(rhs, projected_crank_gf(N, m)));
}

VerificationReport verify_3_dissection(int N, const std::optional<RhsPerturbation>& perturb)
{
    Timer timer;
    const auto& m = Modulus::lambda3();
    const QuotientRing ring(m);
    const auto rhs = perturbed<QuotientRing>(dissection3_rhs(N), perturb,
                                             [&](const LaurentPoly& p) { return ring.project(p); });
    return make_report("dissection-3", N, timer, compare(rhs, projected_crank_gf(N, m)));
}

VerificationReport verify_5_dissection(int N, int n_root, const std::optional<RhsPerturbation>& perturb)
{
    Timer timer;
    const auto& m = Modulus::cyclotomic5();
    const QuotientRing ring(m);
    const auto rhs = perturbed<QuotientRing>(dissection5_rhs(N, n_root), perturb,
                                             [&](const LaurentPoly& p) { return ring.project(p); });
    return make_report("dissection-5 n_root=" + std::to_string(n_root), N, timer,
                       compare(rhs, projected_crank_gf(N, m, n_root)));
}

VerificationReport verify_component4_vanishing(int N)
{
    Timer timer;
    require_order(N, 5, "component-4 check");
    const std::string name = "component-4-vanishing";
    const auto& m = Modulus::cyclotomic5();
    const QuotientRing ring(m);
    for (int n_root = 1; n_root <= 4; ++n_root) {
        const auto rhs4 = dissect(dissection5_rhs(N, n_root), 5)[4];
        const auto lhs4 = dissect(projected_crank_gf(N, m, n_root), 5)[4];
        for (const auto* part : {&rhs4, &lhs4})
            for (int j = 0; j <= part->order(); ++j)
                if (!ring.is_zero((*part)[j]))
                    return make_report(name, N, timer,
                                       FailureWitness{5 * j + 4, "0", ring.format((*part)[j]), ring.name()});
    }
    // a = 1 turns the crank series into the partition generating function.
    const IntSeries at_one = map_coefficients(crank_gf(N), IntegerRing{},
                                              [](const LaurentPoly& c) { return c.sum_of_coefficients(); });
    const auto comp4 = dissect(at_one, 5)[4];
    for (int j = 0; j <= comp4.order(); ++j)
        if (BigInt(comp4[j] % 5) != 0)
            return make_report(name, N, timer, FailureWitness{5 * j + 4, "0 mod 5", to_decimal(comp4[j]), "Z/5"});
    return make_report(name, N, timer);
}

std::vector<LaurentPoly> fa_coefficients(int N)
{
    if (N < 0)
        throw UsageError("fa_coefficients needs N >= 0");
    return crank_gf(N).coeffs();
}

} // namespace qseries
