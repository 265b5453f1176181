#pragma once

#include "qseries/series.hpp"

namespace qseries {

/// (q;q)_inf through q^N from the pentagonal number theorem:
/// sum over k of (-1)^k q^{k(3k-1)/2}.
IntSeries euler_product(int N);

/// (q^k;q^k)_inf, written f(-q^k) in theta notation.
IntSeries euler_product_of_power(int k, int N);

/// Partition generating function 1/(q;q)_inf.
IntSeries partition_gf(int N);

/// prod_{k>=0} (1 - z q^{s+kt}) through q^N. Requires s >= 1 so the
/// constant term is 1.
template <CoefficientRing R>
TruncatedSeries<R> pochhammer_inf(const R& ring, const typename R::Element& z, int s, int t, int N)
{
    if (s < 1)
        throw DomainError("infinite q-Pochhammer product needs s >= 1");
    if (t < 1)
        throw UsageError("infinite q-Pochhammer product needs step t >= 1");
    auto r = TruncatedSeries<R>::one(ring, N);
    for (long e = s; e <= N; e += t)
        r = times_binomial(r, z, static_cast<int>(e));
    return r;
}

/// (z q^shift; q)_n = prod_{k=0}^{n-1} (1 - z q^{shift+k}) through q^N.
template <CoefficientRing R>
TruncatedSeries<R> pochhammer_fin(const R& ring, const typename R::Element& z, int n, int N, int shift = 0)
{
    if (n < 0 || shift < 0)
        throw UsageError("finite q-Pochhammer product needs n >= 0 and shift >= 0");
    auto r = TruncatedSeries<R>::one(ring, N);
    for (int k = 0; k < n; ++k) {
        const int e = shift + k;
        if (e == 0)
            r = r.scaled(ring.one() - z);
        else if (e <= N)
            r = times_binomial(r, z, e);
    }
    return r;
}

/// Ramanujan's f(sign_r q^r, sign_s q^s) = sum_n (sign_r q^r)^{n(n+1)/2} (sign_s q^s)^{n(n-1)/2}
/// through q^N. Signs are +1 or -1; r, s >= 0 and not both zero.
IntSeries theta_f(int sign_r, int r, int sign_s, int s, int N);

/// f(-q^r, -q^s).
inline IntSeries theta_neg(int r, int s, int N) { return theta_f(-1, r, -1, s, N); }

/// (q;q)_inf / ((zq;q)_inf (z^{-1}q;q)_inf) over any ring where z is a unit.
template <CoefficientRing R>
TruncatedSeries<R> crank_product(const R& ring, const typename R::Element& z, int N)
{
    if (!ring.is_unit(z))
        throw DomainError("crank product needs a unit z, got " + ring.format(z));
    const auto z_inv = ring.unit_inverse(z);
    auto r = lift(euler_product(N), ring);
    for (int k = 1; k <= N; ++k) {
        r = divide_binomial(r, z, k);
        r = divide_binomial(r, z_inv, k);
    }
    return r;
}

/// Crank generating function F_a(q) = sum M(m,n) a^m q^n through q^N.
LaurentSeries crank_gf(int N);

/// Rank generating function sum_{n>=0} q^{n^2} / ((aq;q)_n (q/a;q)_n)
/// expanded formally in q through q^N.
LaurentSeries rank_gf(int N);

} // namespace qseries
