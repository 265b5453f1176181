#pragma once

#include "qseries/errors.hpp"
#include "qseries/rings.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qseries {

/// Power series in q known exactly through q^order, with coefficients in a
/// ring described by R. Binary operations truncate to the smaller order.
template <CoefficientRing R>
class TruncatedSeries {
public:
    using Ring = R;
    using Element = typename R::Element;

    TruncatedSeries(R ring, std::vector<Element> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw UsageError("a truncated series needs at least the constant coefficient");
        for (const auto& c : coeffs_)
            if (!ring_.contains(c))
                throw UsageError("coefficient outside the series ring " + ring_.name());
    }

    static TruncatedSeries zero(const R& ring, int order)
    {
        check_order(order);
        return TruncatedSeries(ring, std::vector<Element>(static_cast<std::size_t>(order) + 1, ring.zero()));
    }

    static TruncatedSeries one(const R& ring, int order) { return monomial(ring, order, 0, ring.one()); }

    /// coefficient * q^power; vanishes entirely when power > order.
    static TruncatedSeries monomial(const R& ring, int order, int power, const Element& coefficient)
    {
        if (power < 0)
            throw UsageError("negative power of q");
        TruncatedSeries s = zero(ring, order);
        if (power <= order)
            s.coeffs_[static_cast<std::size_t>(power)] = coefficient;
        return s;
    }

    const R& ring() const { return ring_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Element>& coeffs() const { return coeffs_; }
    const Element& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    TruncatedSeries truncated(int order) const
    {
        check_order(order);
        if (order > this->order())
            throw UsageError("cannot raise the truncation order of a series");
        return TruncatedSeries(ring_, std::vector<Element>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries scaled(const Element& factor) const
    {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_)
            if (!ring_.is_zero(c))
                c = c * factor;
        return r;
    }

    /// Multiply by q^k, keeping the order.
    TruncatedSeries shifted(int k) const
    {
        if (k < 0)
            throw UsageError("negative shift");
        TruncatedSeries r = zero(ring_, order());
        for (int n = k; n <= order(); ++n)
            r.coeffs_[n] = coeffs_[n - k];
        return r;
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const int n = common_order(x, y);
        TruncatedSeries r = x.truncated(n);
        for (int i = 0; i <= n; ++i)
            r.coeffs_[i] = r.coeffs_[i] + y.coeffs_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x + (-y);
    }

    friend TruncatedSeries operator*(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const int n = common_order(x, y);
        TruncatedSeries r = zero(x.ring_, n);
        for (int i = 0; i <= n; ++i) {
            if (x.ring_.is_zero(x.coeffs_[i]))
                continue;
            for (int j = 0; i + j <= n; ++j) {
                if (x.ring_.is_zero(y.coeffs_[j]))
                    continue;
                r.coeffs_[i + j] = r.coeffs_[i + j] + x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return r;
    }

    /// Same ring, same order, identical coefficients.
    friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        return x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
    }

    /// Index of the first differing coefficient up to the common order, or -1.
    friend int first_difference(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        const int n = common_order(x, y);
        for (int i = 0; i <= n; ++i)
            if (!(x.coeffs_[i] == y.coeffs_[i]))
                return i;
        return -1;
    }

private:
    static void check_order(int order)
    {
        if (order < 0)
            throw UsageError("truncation order must be nonnegative");
    }

    static int common_order(const TruncatedSeries& x, const TruncatedSeries& y)
    {
        if (!(x.ring_ == y.ring_))
            throw UsageError("series ring mismatch: " + x.ring_.name() + " vs " + y.ring_.name());
        return std::min(x.order(), y.order());
    }

    R ring_;
    std::vector<Element> coeffs_;
};

using IntSeries = TruncatedSeries<IntegerRing>;
using LaurentSeries = TruncatedSeries<LaurentRing>;
using QuotientSeries = TruncatedSeries<QuotientRing>;

/// Multiplicative inverse through the order of x via the usual recurrence
/// y_n = -c_0^{-1} sum_{k=1}^{n} c_k y_{n-k}. Throws DomainError when c_0
/// is not a unit.
template <CoefficientRing R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& x)
{
    const R& ring = x.ring();
    if (!ring.is_unit(x[0]))
        throw DomainError("series constant term " + ring.format(x[0]) + " is not a unit");
    const auto inv0 = ring.unit_inverse(x[0]);
    const int n = x.order();
    std::vector<typename R::Element> y(static_cast<std::size_t>(n) + 1, ring.zero());
    y[0] = inv0;
    for (int i = 1; i <= n; ++i) {
        typename R::Element acc = ring.zero();
        for (int k = 1; k <= i; ++k)
            if (!ring.is_zero(x[k]) && !ring.is_zero(y[i - k]))
                acc = acc + x[k] * y[i - k];
        y[i] = -(acc * inv0);
    }
    return TruncatedSeries<R>(ring, std::move(y));
}

/// x * (1 - z q^k), k >= 1, in O(order) ring operations.
template <CoefficientRing R>
TruncatedSeries<R> times_binomial(const TruncatedSeries<R>& x, const typename R::Element& z, int k)
{
    if (k < 1)
        throw UsageError("binomial factor needs k >= 1");
    std::vector<typename R::Element> out = x.coeffs();
    for (int n = x.order(); n >= k; --n)
        if (!x.ring().is_zero(x[n - k]))
            out[n] = out[n] - z * x[n - k];
    return TruncatedSeries<R>(x.ring(), std::move(out));
}

/// x / (1 - z q^k), k >= 1: y_n = x_n + z y_{n-k}.
template <CoefficientRing R>
TruncatedSeries<R> divide_binomial(const TruncatedSeries<R>& x, const typename R::Element& z, int k)
{
    if (k < 1)
        throw UsageError("binomial factor needs k >= 1");
    std::vector<typename R::Element> out = x.coeffs();
    for (int n = k; n <= x.order(); ++n)
        if (!x.ring().is_zero(out[n - k]))
            out[n] = out[n] + z * out[n - k];
    return TruncatedSeries<R>(x.ring(), std::move(out));
}

/// q -> q^m, truncated at `order`. Without an explicit order the result is
/// kept to m*(N+1)-1, the last power fully determined by x.
template <CoefficientRing R>
TruncatedSeries<R> substitute_power(const TruncatedSeries<R>& x, int m, int order)
{
    if (m < 1)
        throw UsageError("substitution power must be >= 1");
    const long determined = static_cast<long>(m) * (x.order() + 1) - 1;
    if (order > determined)
        throw UsageError("substitution would need coefficients beyond the truncation order");
    auto r = TruncatedSeries<R>::zero(x.ring(), order);
    std::vector<typename R::Element> out = r.coeffs();
    for (int n = 0; static_cast<long>(n) * m <= order; ++n)
        out[static_cast<std::size_t>(n) * m] = x[n];
    return TruncatedSeries<R>(x.ring(), std::move(out));
}

template <CoefficientRing R>
TruncatedSeries<R> substitute_power(const TruncatedSeries<R>& x, int m)
{
    if (m < 1)
        throw UsageError("substitution power must be >= 1");
    return substitute_power(x, m, m * (x.order() + 1) - 1);
}

/// Components P_0..P_{m-1} with x = sum_k q^k P_k(q^m). P_k carries
/// coefficients c_{jm+k} for jm+k <= N, so its order is floor((N-k)/m);
/// components with k > N are returned as the zero series of order 0.
template <CoefficientRing R>
std::vector<TruncatedSeries<R>> dissect(const TruncatedSeries<R>& x, int m)
{
    if (m < 1)
        throw UsageError("dissection modulus must be >= 1");
    std::vector<TruncatedSeries<R>> parts;
    parts.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (k > x.order()) {
            parts.push_back(TruncatedSeries<R>::zero(x.ring(), 0));
            continue;
        }
        std::vector<typename R::Element> c;
        for (int n = k; n <= x.order(); n += m)
            c.push_back(x[n]);
        parts.emplace_back(x.ring(), std::move(c));
    }
    return parts;
}

/// Inverse of dissect: sum_k q^k P_k(q^m) through q^order.
template <CoefficientRing R>
TruncatedSeries<R> reassemble(const std::vector<TruncatedSeries<R>>& parts, int order)
{
    if (parts.empty())
        throw UsageError("nothing to reassemble");
    const int m = static_cast<int>(parts.size());
    auto r = TruncatedSeries<R>::zero(parts.front().ring(), order);
    std::vector<typename R::Element> out = r.coeffs();
    for (int k = 0; k < m; ++k) {
        if (!(parts[k].ring() == r.ring()))
            throw UsageError("dissection components live in different rings");
        for (int n = k; n <= order; n += m) {
            const int j = (n - k) / m;
            if (j > parts[k].order())
                throw UsageError("component " + std::to_string(k) + " is truncated too early");
            out[n] = parts[k][j];
        }
    }
    return TruncatedSeries<R>(r.ring(), std::move(out));
}

/// Coefficient-wise image under a ring map.
template <CoefficientRing To, CoefficientRing From, class F>
TruncatedSeries<To> map_coefficients(const TruncatedSeries<From>& x, const To& target, F&& f)
{
    std::vector<typename To::Element> out;
    out.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs())
        out.push_back(f(c));
    return TruncatedSeries<To>(target, std::move(out));
}

/// Integer series viewed in any ring via the canonical map Z -> R.
template <CoefficientRing To>
TruncatedSeries<To> lift(const IntSeries& x, const To& target)
{
    return map_coefficients(x, target, [&](const BigInt& c) { return target.from_integer(c); });
}

} // namespace qseries
