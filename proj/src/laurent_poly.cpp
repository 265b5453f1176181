#include "qseries/laurent_poly.hpp"

#include "qseries/errors.hpp"

#include <algorithm>
#include <map>

namespace qseries {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(const BigInt& constant)
{
    if (constant != 0)
        terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& coefficient)
{
    if (coefficient == 0)
        return {};
    return LaurentPoly(std::vector<Term>{{exponent, coefficient}});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (out.back().second == 0)
            out.pop_back();
    }
    return LaurentPoly(std::move(out));
}

BigInt LaurentPoly::coefficient(int exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent)
        return it->second;
    return 0;
}

int LaurentPoly::min_exponent() const
{
    if (terms_.empty())
        throw DomainError("min_exponent of the zero Laurent polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exponent() const
{
    if (terms_.empty())
        throw DomainError("max_exponent of the zero Laurent polynomial");
    return terms_.back().first;
}

bool LaurentPoly::is_palindromic() const
{
    const std::size_t n = terms_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Term& lo = terms_[i];
        const Term& hi = terms_[n - 1 - i];
        if (lo.first != -hi.first || lo.second != hi.second)
            return false;
    }
    return true;
}

LaurentPoly LaurentPoly::substitute_power(int k) const
{
    if (k == 1)
        return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_)
        out.emplace_back(e * k, c);
    return from_terms(std::move(out));
}

BigInt LaurentPoly::sum_of_coefficients() const
{
    BigInt s = 0;
    for (const auto& t : terms_)
        s += t.second;
    return s;
}

bool LaurentPoly::is_unit() const
{
    return terms_.size() == 1 && abs(terms_.front().second) == 1;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

namespace {

template <class Combine>
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& x,
                                     const std::vector<LaurentPoly::Term>& y,
                                     Combine combine, bool negate_y)
{
    std::vector<LaurentPoly::Term> out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, negate_y ? BigInt(-j->second) : j->second);
            ++j;
        } else {
            BigInt c = combine(i->second, j->second);
            if (c != 0)
                out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y)
{
    return LaurentPoly(merge(
        x.terms_, y.terms_, [](const BigInt& u, const BigInt& v) { return BigInt(u + v); },
        false));
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y)
{
    return LaurentPoly(merge(
        x.terms_, y.terms_, [](const BigInt& u, const BigInt& v) { return BigInt(u - v); },
        true));
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y)
{
    if (x.is_zero() || y.is_zero())
        return {};
    // Dense accumulation over the exponent span of the product.
    const int lo = x.terms_.front().first + y.terms_.front().first;
    const int hi = x.terms_.back().first + y.terms_.back().first;
    std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo) + 1);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_)
            mpz_addmul(acc[ex + ey - lo].get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    std::vector<LaurentPoly::Term> out;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (acc[k] != 0)
            out.emplace_back(static_cast<int>(k) + lo, std::move(acc[k]));
    return LaurentPoly(std::move(out));
}

bool operator==(const LaurentPoly& x, const LaurentPoly& y)
{
    return x.terms_ == y.terms_;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool first = it == terms_.rbegin();
        BigInt mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (e == 0) {
            s += to_decimal(mag);
            continue;
        }
        if (mag != 1)
            s += to_decimal(mag) + "*";
        s += "a";
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    return s;
}

} // namespace qseries
