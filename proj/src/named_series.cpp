#include "qseries/named_series.hpp"

namespace qseries {

IntSeries euler_product(int N)
{
    auto r = IntSeries::zero(IntegerRing{}, N);
    std::vector<BigInt> c = r.coeffs();
    c[0] = 1;
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        const long e2 = k * (3 * k + 1) / 2;
        if (e1 > N)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] += sign;
        if (e2 <= N)
            c[static_cast<std::size_t>(e2)] += sign;
    }
    return IntSeries(IntegerRing{}, std::move(c));
}

IntSeries euler_product_of_power(int k, int N)
{
    if (k < 1)
        throw UsageError("euler_product_of_power needs k >= 1");
    return substitute_power(euler_product(N / k), k, N);
}

IntSeries partition_gf(int N) { return invert(euler_product(N)); }

IntSeries theta_f(int sign_r, int r, int sign_s, int s, int N)
{
    if ((sign_r != 1 && sign_r != -1) || (sign_s != 1 && sign_s != -1))
        throw UsageError("theta_f signs must be +1 or -1");
    if (r < 0 || s < 0)
        throw UsageError("theta_f exponents must be nonnegative");
    if (r == 0 && s == 0)
        throw DomainError("theta_f(+-1, +-1) does not converge");
    auto zero = IntSeries::zero(IntegerRing{}, N);
    std::vector<BigInt> c = zero.coeffs();
    // Term n contributes q^{r T(n) + s T(n-1)} with T(n) = n(n+1)/2; for
    // n >= 0 and for n = -m, m >= 1, the exponent is nondecreasing in |n|.
    auto add_term = [&](long n) {
        const long tr = n * (n + 1) / 2;
        const long ts = n * (n - 1) / 2;
        const long e = r * tr + s * ts;
        if (e > N)
            return false;
        int sign = 1;
        if (sign_r < 0 && (tr % 2 != 0))
            sign = -sign;
        if (sign_s < 0 && (ts % 2 != 0))
            sign = -sign;
        c[static_cast<std::size_t>(e)] += sign;
        return true;
    };
    for (long n = 0; add_term(n); ++n) {
    }
    for (long n = -1; add_term(n); --n) {
    }
    return IntSeries(IntegerRing{}, std::move(c));
}

LaurentSeries crank_gf(int N)
{
    return crank_product(LaurentRing{}, LaurentPoly::monomial(1), N);
}

LaurentSeries rank_gf(int N)
{
    const LaurentRing ring;
    const LaurentPoly a = LaurentPoly::monomial(1);
    const LaurentPoly a_inv = LaurentPoly::monomial(-1);
    auto total = LaurentSeries::zero(ring, N);
    for (int n = 0; n * n <= N; ++n) {
        auto term = LaurentSeries::monomial(ring, N, n * n, ring.one());
        for (int k = 1; k <= n; ++k) {
            term = divide_binomial(term, a, k);
            term = divide_binomial(term, a_inv, k);
        }
        total = total + term;
    }
    return total;
}

} // namespace qseries
