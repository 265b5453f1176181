#pragma once

#include "qseries/bigint.hpp"
#include "qseries/errors.hpp"
#include "qseries/laurent_poly.hpp"
#include "qseries/quotient.hpp"

#include <concepts>
#include <string>

namespace qseries {

// A coefficient ring descriptor names the element type and supplies the
// constants and unit handling that generic series code cannot derive from
// the element operators alone.
template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::Element& x, const BigInt& n) {
    { ring.zero() } -> std::same_as<typename R::Element>;
    { ring.one() } -> std::same_as<typename R::Element>;
    { ring.from_integer(n) } -> std::same_as<typename R::Element>;
    { ring.contains(x) } -> std::convertible_to<bool>;
    { ring.is_zero(x) } -> std::convertible_to<bool>;
    { ring.is_unit(x) } -> std::convertible_to<bool>;
    { ring.unit_inverse(x) } -> std::same_as<typename R::Element>;
    { ring.format(x) } -> std::convertible_to<std::string>;
    { ring.name() } -> std::convertible_to<std::string>;
    { ring == ring } -> std::convertible_to<bool>;
    { x + x } -> std::convertible_to<typename R::Element>;
    { x - x } -> std::convertible_to<typename R::Element>;
    { x * x } -> std::convertible_to<typename R::Element>;
    { -x } -> std::convertible_to<typename R::Element>;
};

struct IntegerRing {
    using Element = BigInt;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const BigInt& n) const { return n; }
    bool contains(const Element&) const { return true; }
    bool is_zero(const Element& x) const { return x == 0; }
    bool is_unit(const Element& x) const { return abs(x) == 1; }
    Element unit_inverse(const Element& x) const
    {
        if (!is_unit(x))
            throw DomainError(to_decimal(x) + " is not a unit in Z");
        return x;
    }
    std::string format(const Element& x) const { return to_decimal(x); }
    std::string name() const { return "Z"; }
    friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct LaurentRing {
    using Element = LaurentPoly;

    Element zero() const { return {}; }
    Element one() const { return 1L; }
    Element from_integer(const BigInt& n) const { return n; }
    bool contains(const Element&) const { return true; }
    bool is_zero(const Element& x) const { return x.is_zero(); }
    bool is_unit(const Element& x) const { return x.is_unit(); }
    Element unit_inverse(const Element& x) const
    {
        if (!is_unit(x))
            throw DomainError(x.to_string() + " is not a unit in Z[a,a^-1]");
        const auto& [e, c] = x.terms().front();
        return LaurentPoly::monomial(-e, c);
    }
    std::string format(const Element& x) const { return x.to_string(); }
    std::string name() const { return "Z[a,a^-1]"; }
    friend bool operator==(const LaurentRing&, const LaurentRing&) { return true; }
};

class QuotientRing {
public:
    using Element = QuotientElem;

    explicit QuotientRing(ModulusPtr modulus) : modulus_(std::move(modulus))
    {
        if (!modulus_)
            throw UsageError("quotient ring without modulus");
    }

    const ModulusPtr& modulus() const { return modulus_; }

    Element zero() const { return QuotientElem::zero(modulus_); }
    Element one() const { return QuotientElem::one(modulus_); }
    Element from_integer(const BigInt& n) const { return QuotientElem::from_integer(modulus_, n); }
    Element project(const LaurentPoly& p) const { return qseries::project(p, modulus_); }
    bool contains(const Element& x) const
    {
        return x.modulus() == modulus_ || *x.modulus() == *modulus_;
    }
    bool is_zero(const Element& x) const { return x.is_zero(); }
    bool is_unit(const Element& x) const { return x.is_unit(); }
    Element unit_inverse(const Element& x) const { return x.inverse(); }
    std::string format(const Element& x) const { return x.to_string(); }
    std::string name() const { return "Z[a]/(" + modulus_->to_string() + ")"; }
    friend bool operator==(const QuotientRing& x, const QuotientRing& y)
    {
        return x.modulus_ == y.modulus_ || *x.modulus_ == *y.modulus_;
    }

private:
    ModulusPtr modulus_;
};

static_assert(CoefficientRing<IntegerRing>);
static_assert(CoefficientRing<LaurentRing>);
static_assert(CoefficientRing<QuotientRing>);

} // namespace qseries
