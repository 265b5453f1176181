#include "oracles.hpp"
#include "random_values.hpp"

#include "qseries/errors.hpp"
#include "qseries/quotient.hpp"
#include "qseries/rings.hpp"

#include <doctest.h>

#include <random>

using namespace qseries;

namespace {

LaurentPoly a(int e, long c = 1) { return LaurentPoly::monomial(e, c); }

std::map<int, BigInt> as_map(const LaurentPoly& p)
{
    return {p.terms().begin(), p.terms().end()};
}

const std::vector<ModulusPtr>& all_moduli()
{
    static const std::vector<ModulusPtr> m{Modulus::lambda2(), Modulus::lambda3(), Modulus::cyclotomic5()};
    return m;
}

} // namespace

TEST_CASE("laurent addition")
{
    const LaurentPoly s = a(1) + a(-1);
    CHECK(s + LaurentPoly{} == s);
    CHECK((a(1) - 1) + (1 - a(1)) == LaurentPoly{});
    CHECK((a(1) - 1 + a(-1)) + (a(2) + a(-2)) == a(2) + a(1) - 1 + a(-1) + a(-2));
    CHECK((a(1) - a(1)).terms().empty());
}

TEST_CASE("laurent multiplication")
{
    CHECK((a(1) + a(-1)) * (a(1) - a(-1)) == a(2) - a(-2));
    const LaurentPoly p = a(3, 4) - a(-2, 7) + 5;
    CHECK(p * 1L == p);
    CHECK(p * LaurentPoly{} == LaurentPoly{});

    const LaurentPoly x = a(1) - 1 + a(-1);
    const auto brute = oracle::laurent_product(as_map(x), as_map(x));
    CHECK(as_map(x * x) == brute);
    CHECK(x * x == a(2) - a(1, 2) + 3 - a(-1, 2) + a(-2));
}

TEST_CASE("laurent palindromy")
{
    CHECK((a(1) + a(-1)).is_palindromic());
    CHECK((a(1) - 1 + a(-1)).is_palindromic());
    CHECK_FALSE((a(2) + a(1)).is_palindromic());
    CHECK(LaurentPoly{}.is_palindromic());
    CHECK_FALSE((a(1) + a(-1, 2)).is_palindromic());
}

TEST_CASE("laurent canonical form")
{
    const auto p = LaurentPoly::from_terms({{2, 3}, {-1, 1}, {2, -3}, {0, 0}, {-1, 4}});
    REQUIRE(p.size() == 1);
    CHECK(p.coefficient(-1) == 5);
    CHECK(p.coefficient(2) == 0);
    CHECK_THROWS_AS(LaurentPoly{}.min_exponent(), DomainError);
    CHECK((a(2) - 2 + a(-3)).to_string() == "a^2 - 2 + a^-3");
    CHECK((a(2) - a(1, 2) + 3).to_string() == "a^2 - 2*a + 3");
    CHECK(a(-1, -1).to_string() == "-a^-1");
    CHECK((a(1) + a(-1)).substitute_power(3) == a(3) + a(-3));
    CHECK((a(2) - a(1) + 4).sum_of_coefficients() == 4);
}

TEST_CASE("modulus validation")
{
    CHECK_THROWS_AS(Modulus({1}), UsageError);
    CHECK_THROWS_AS(Modulus({1, 0, 2}), UsageError);
    CHECK_THROWS_AS(Modulus({0, 1}), UsageError);
    CHECK_THROWS_AS(Modulus({2, 0, 1}), UsageError);
    CHECK_NOTHROW(Modulus({-1, 0, 1}));
    CHECK(Modulus::lambda2()->degree() == 4);
    CHECK(Modulus::lambda3()->degree() == 6);
    CHECK(Modulus::cyclotomic5()->degree() == 4);
}

TEST_CASE("projection examples")
{
    const auto m2 = Modulus::lambda2();
    CHECK(project(a(-1), m2) == project(-a(3), m2));
    CHECK(project(a(-1), m2).residue() == std::vector<BigInt>{0, 0, 0, -1});
    CHECK(project(a(2) + a(-2), m2).is_zero());
    CHECK(project(a(9), Modulus::lambda3()) == QuotientElem::one(Modulus::lambda3()));
    CHECK(project(a(8), m2) == QuotientElem::one(m2));
    CHECK(project(a(5), Modulus::cyclotomic5()) == QuotientElem::one(Modulus::cyclotomic5()));
    CHECK(project(a(3) + 1 + a(-3), Modulus::lambda3()).is_zero());
    CHECK(project(a(4), m2) == QuotientElem::from_integer(m2, -1));
}

TEST_CASE("quotient operations")
{
    for (const auto& m : all_moduli()) {
        const auto x = project(a(1), m);
        const auto x_inv = project(a(-1), m);
        CHECK(x * x_inv == QuotientElem::one(m));
        CHECK(x.divided_by_a() == project(LaurentPoly(1L), m));
        CHECK(x.is_unit());
        CHECK(x.inverse() == x_inv);
        CHECK(-x + x == QuotientElem::zero(m));
    }
    const auto m2 = Modulus::lambda2();
    CHECK(project(a(4), m2) * project(a(4), m2) == QuotientElem::one(m2));
    CHECK(project(a(2) + a(-2), m2) + QuotientElem::zero(m2) == QuotientElem::zero(m2));

    // 1 + a has norm 2 modulo a^4 + 1, so it is not a unit.
    const auto one_plus_a = project(1 + a(1), m2);
    CHECK_FALSE(one_plus_a.is_unit());
    CHECK_THROWS_AS(one_plus_a.inverse(), DomainError);
    CHECK_FALSE(QuotientElem::zero(m2).is_unit());
    // 1 + a is a unit modulo Phi_5 (a cyclotomic unit); check the inverse exactly.
    const auto m5 = Modulus::cyclotomic5();
    const auto u = project(1 + a(1), m5);
    REQUIRE(u.is_unit());
    CHECK(u * u.inverse() == QuotientElem::one(m5));
}

TEST_CASE("quotient modulus mismatch")
{
    const auto x = project(a(1), Modulus::lambda2());
    const auto y = project(a(1), Modulus::cyclotomic5());
    CHECK_THROWS_AS(x + y, UsageError);
    CHECK_THROWS_AS(x * y, UsageError);
    CHECK_THROWS_AS(x - y, UsageError);
    CHECK_FALSE(x == y);
    CHECK_THROWS_AS(QuotientElem(Modulus::lambda2(), {1, 2}), UsageError);
    // Structurally equal moduli from different allocations interoperate.
    auto copy = std::make_shared<const Modulus>(*Modulus::lambda2());
    CHECK(project(a(1), copy) == x);
    CHECK_NOTHROW(project(a(1), copy) * x);
}

TEST_CASE("laurent ring axioms on random triples")
{
    std::mt19937_64 rng(20261015);
    for (int i = 0; i < 1000; ++i) {
        const auto x = testgen::laurent(rng);
        const auto y = testgen::laurent(rng);
        const auto z = testgen::laurent(rng);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        REQUIRE(x * (y + z) == x * y + x * z);
        REQUIRE(x + LaurentPoly{} == x);
        REQUIRE(x * 1L == x);
        REQUIRE(x + (-x) == LaurentPoly{});
        REQUIRE(as_map(x * y) == oracle::laurent_product(as_map(x), as_map(y)));
    }
}

TEST_CASE("quotient ring axioms and projection morphism")
{
    std::mt19937_64 rng(77);
    for (const auto& m : all_moduli()) {
        const QuotientRing ring(m);
        for (int i = 0; i < 1000; ++i) {
            const auto p = testgen::laurent(rng, 12);
            const auto q = testgen::laurent(rng, 12);
            const auto r = testgen::laurent(rng, 12);
            const auto x = ring.project(p);
            const auto y = ring.project(q);
            const auto z = ring.project(r);
            REQUIRE(ring.project(p + q) == x + y);
            REQUIRE(ring.project(p * q) == x * y);
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x * y == y * x);
            REQUIRE(x * ring.one() == x);
            // Canonical residues are fixed points of projection.
            REQUIRE(ring.project(x.to_laurent()) == x);
        }
    }
}

TEST_CASE("root-of-unity orders")
{
    auto order_of_a = [](const ModulusPtr& m) {
        for (int k = 1; k <= 50; ++k)
            if (project(a(k), m) == QuotientElem::one(m))
                return k;
        return -1;
    };
    CHECK(order_of_a(Modulus::lambda2()) == 8);
    CHECK(order_of_a(Modulus::lambda3()) == 9);
    CHECK(order_of_a(Modulus::cyclotomic5()) == 5);
}

TEST_CASE("coefficient ring descriptors")
{
    CHECK(IntegerRing{}.is_unit(BigInt(-1)));
    CHECK_FALSE(IntegerRing{}.is_unit(BigInt(2)));
    CHECK_THROWS_AS(IntegerRing{}.unit_inverse(BigInt(3)), DomainError);
    CHECK(LaurentRing{}.unit_inverse(a(3, -1)) == a(-3, -1));
    CHECK_THROWS_AS(LaurentRing{}.unit_inverse(a(1) + 1), DomainError);
    const QuotientRing r2(Modulus::lambda2());
    CHECK(r2.name() == "Z[a]/(a^4 + 1)");
    CHECK_FALSE(r2 == QuotientRing(Modulus::lambda3()));
}
