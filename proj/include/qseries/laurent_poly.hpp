#pragma once

#include "qseries/bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qseries {

/// Laurent polynomial in a single symbol `a` with big-integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal exactly when their term lists are equal and the
/// zero polynomial has no terms.
class LaurentPoly {
public:
    using Term = std::pair<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long constant); // NOLINT(google-explicit-constructor)
    LaurentPoly(const BigInt& constant); // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exponent, const BigInt& coefficient = 1);
    /// Duplicated exponents are summed; zeros dropped.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigInt coefficient(int exponent) const;

    // Precondition: nonzero.
    int min_exponent() const;
    int max_exponent() const;

    /// True iff the coefficient of a^k equals that of a^-k for every k.
    bool is_palindromic() const;

    /// a -> a^k. k = 0 collapses everything onto the constant term.
    LaurentPoly substitute_power(int k) const;

    /// Value at a = 1, i.e. the sum of all coefficients.
    BigInt sum_of_coefficients() const;

    /// Single term with coefficient +1 or -1.
    bool is_unit() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y);

    LaurentPoly& operator+=(const LaurentPoly& y) { return *this = *this + y; }
    LaurentPoly& operator-=(const LaurentPoly& y) { return *this = *this - y; }
    LaurentPoly& operator*=(const LaurentPoly& y) { return *this = *this * y; }

    /// Human-readable form, highest exponent first, e.g. "a^2 - 2*a + 3 - 2*a^-1 + a^-2".
    std::string to_string() const;

private:
    explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

    std::vector<Term> terms_;
};

} // namespace qseries
