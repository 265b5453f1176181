#pragma once

#include "qseries/bigint.hpp"
#include "qseries/laurent_poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qseries {

/// Monic integer polynomial m(a) of degree d >= 1 whose constant term is +1
/// or -1, so that `a` is a unit of Z[a]/(m(a)).
class Modulus {
public:
    /// `coeffs` runs from the constant term up to the leading 1.
    explicit Modulus(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    std::string to_string() const;

    friend bool operator==(const Modulus& x, const Modulus& y) { return x.coeffs_ == y.coeffs_; }

    /// a^4 + 1, the cleared form of a^2 + a^-2.
    static std::shared_ptr<const Modulus> lambda2();
    /// a^6 + a^3 + 1, the cleared form of a^3 + 1 + a^-3.
    static std::shared_ptr<const Modulus> lambda3();
    /// a^4 + a^3 + a^2 + a + 1.
    static std::shared_ptr<const Modulus> cyclotomic5();

private:
    std::vector<BigInt> coeffs_;
};

using ModulusPtr = std::shared_ptr<const Modulus>;

/// Canonical residue in Z[a]/(m(a)): exactly deg(m) coefficients for
/// degrees 0..d-1.
class QuotientElem {
public:
    QuotientElem(ModulusPtr modulus, std::vector<BigInt> residue);

    static QuotientElem zero(ModulusPtr modulus);
    static QuotientElem one(ModulusPtr modulus);
    static QuotientElem from_integer(ModulusPtr modulus, const BigInt& c);

    const ModulusPtr& modulus() const { return modulus_; }
    const std::vector<BigInt>& residue() const { return residue_; }
    bool is_zero() const;

    /// The residue read back as an ordinary polynomial in a.
    LaurentPoly to_laurent() const;

    /// Multiplication by a^-1. Cheap because m has unit constant term.
    QuotientElem divided_by_a() const;
    QuotientElem times_a() const;

    /// Unit iff the norm (determinant of multiplication-by-x) is +1 or -1.
    bool is_unit() const;
    /// Throws DomainError when not a unit.
    QuotientElem inverse() const;

    QuotientElem operator-() const;
    friend QuotientElem operator+(const QuotientElem& x, const QuotientElem& y);
    friend QuotientElem operator-(const QuotientElem& x, const QuotientElem& y);
    friend QuotientElem operator*(const QuotientElem& x, const QuotientElem& y);
    /// Residues compared exactly; different moduli never compare equal.
    friend bool operator==(const QuotientElem& x, const QuotientElem& y);

    std::string to_string() const { return to_laurent().to_string(); }

private:
    ModulusPtr modulus_;
    std::vector<BigInt> residue_;
};

/// Image of a Laurent polynomial in Z[a]/(m(a)). Negative exponents are
/// cleared by a power of a and then divided back out through a^-1.
QuotientElem project(const LaurentPoly& p, const ModulusPtr& modulus);

/// Reduce a dense polynomial (constant term first) modulo m in place and
/// return the d low coefficients.
std::vector<BigInt> reduce_dense(std::vector<BigInt> dense, const Modulus& m);

} // namespace qseries
