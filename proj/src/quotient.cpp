#include "qseries/quotient.hpp"

#include "qseries/errors.hpp"

#include <utility>

namespace qseries {

Modulus::Modulus(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() < 2)
        throw UsageError("modulus must have degree at least 1");
    if (coeffs_.back() != 1)
        throw UsageError("modulus must be monic");
    if (abs(coeffs_.front()) != 1)
        throw UsageError("modulus constant term must be +1 or -1");
}

std::string Modulus::to_string() const
{
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        terms.emplace_back(static_cast<int>(i), coeffs_[i]);
    return LaurentPoly::from_terms(std::move(terms)).to_string();
}

ModulusPtr Modulus::lambda2()
{
    static const ModulusPtr m = std::make_shared<const Modulus>(std::vector<BigInt>{1, 0, 0, 0, 1});
    return m;
}

ModulusPtr Modulus::lambda3()
{
    static const ModulusPtr m =
        std::make_shared<const Modulus>(std::vector<BigInt>{1, 0, 0, 1, 0, 0, 1});
    return m;
}

ModulusPtr Modulus::cyclotomic5()
{
    static const ModulusPtr m = std::make_shared<const Modulus>(std::vector<BigInt>{1, 1, 1, 1, 1});
    return m;
}

std::vector<BigInt> reduce_dense(std::vector<BigInt> dense, const Modulus& m)
{
    const auto d = static_cast<std::size_t>(m.degree());
    const auto& mc = m.coeffs();
    for (std::size_t i = dense.size(); i-- > d;) {
        if (dense[i] == 0)
            continue;
        const BigInt c = dense[i];
        // a^i = a^(i-d) * (a^d - m(a))
        for (std::size_t j = 0; j < d; ++j)
            if (mc[j] != 0)
                mpz_submul(dense[i - d + j].get_mpz_t(), c.get_mpz_t(), mc[j].get_mpz_t());
        dense[i] = 0;
    }
    dense.resize(d);
    return dense;
}

namespace {

void require_same(const QuotientElem& x, const QuotientElem& y)
{
    if (x.modulus() != y.modulus() && !(*x.modulus() == *y.modulus()))
        throw UsageError("quotient ring operands have different moduli");
}

// Exact determinant and linear solve over Q for the d x d multiplication matrix.
struct Elimination {
    BigInt det;
    std::vector<mpq_class> solution;
};

Elimination solve_rational(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b)
{
    const std::size_t n = b.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return {0, {}};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0)
                continue;
            const mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c)
                a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<mpq_class> x(n);
    for (std::size_t i = n; i-- > 0;) {
        mpq_class s = b[i];
        for (std::size_t c = i + 1; c < n; ++c)
            s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return {BigInt(det.get_num()), std::move(x)};
}

Elimination multiplication_system(const QuotientElem& x)
{
    const auto d = static_cast<std::size_t>(x.modulus()->degree());
    // Column j is x * a^j.
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
    QuotientElem col = x;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            a[i][j] = col.residue()[i];
        col = col.times_a();
    }
    std::vector<mpq_class> e0(d, 0);
    e0[0] = 1;
    return solve_rational(std::move(a), std::move(e0));
}

} // namespace

QuotientElem::QuotientElem(ModulusPtr modulus, std::vector<BigInt> residue)
    : modulus_(std::move(modulus)), residue_(std::move(residue))
{
    if (!modulus_)
        throw UsageError("quotient element without modulus");
    if (residue_.size() != static_cast<std::size_t>(modulus_->degree()))
        throw UsageError("residue length must equal the modulus degree");
}

QuotientElem QuotientElem::zero(ModulusPtr modulus)
{
    const auto d = static_cast<std::size_t>(modulus->degree());
    return {std::move(modulus), std::vector<BigInt>(d)};
}

QuotientElem QuotientElem::one(ModulusPtr modulus) { return from_integer(std::move(modulus), 1); }

QuotientElem QuotientElem::from_integer(ModulusPtr modulus, const BigInt& c)
{
    QuotientElem r = zero(std::move(modulus));
    r.residue_[0] = c;
    return r;
}

bool QuotientElem::is_zero() const
{
    for (const auto& c : residue_)
        if (c != 0)
            return false;
    return true;
}

LaurentPoly QuotientElem::to_laurent() const
{
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < residue_.size(); ++i)
        if (residue_[i] != 0)
            terms.emplace_back(static_cast<int>(i), residue_[i]);
    return LaurentPoly::from_terms(std::move(terms));
}

QuotientElem QuotientElem::times_a() const
{
    std::vector<BigInt> dense(residue_.size() + 1);
    for (std::size_t i = 0; i < residue_.size(); ++i)
        dense[i + 1] = residue_[i];
    return {modulus_, reduce_dense(std::move(dense), *modulus_)};
}

QuotientElem QuotientElem::divided_by_a() const
{
    // m = c0 + c1 a + ... + a^d with c0 = +-1 gives
    // a^-1 = -c0 (c1 + c2 a + ... + a^(d-1)).
    const auto& mc = modulus_->coeffs();
    const auto d = residue_.size();
    std::vector<BigInt> out(d);
    for (std::size_t i = 1; i < d; ++i)
        out[i - 1] = residue_[i];
    if (residue_[0] != 0) {
        const BigInt scale = -mc[0] * residue_[0];
        for (std::size_t i = 0; i < d; ++i)
            mpz_addmul(out[i].get_mpz_t(), scale.get_mpz_t(), mc[i + 1].get_mpz_t());
    }
    return {modulus_, std::move(out)};
}

bool QuotientElem::is_unit() const
{
    return abs(multiplication_system(*this).det) == 1;
}

QuotientElem QuotientElem::inverse() const
{
    auto sys = multiplication_system(*this);
    if (abs(sys.det) != 1)
        throw DomainError("element " + to_string() + " is not a unit modulo " + modulus_->to_string());
    std::vector<BigInt> r(sys.solution.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = sys.solution[i].get_num(); // integral since det = +-1
    return {modulus_, std::move(r)};
}

QuotientElem QuotientElem::operator-() const
{
    QuotientElem r = *this;
    for (auto& c : r.residue_)
        c = -c;
    return r;
}

QuotientElem operator+(const QuotientElem& x, const QuotientElem& y)
{
    require_same(x, y);
    QuotientElem r = x;
    for (std::size_t i = 0; i < r.residue_.size(); ++i)
        r.residue_[i] += y.residue_[i];
    return r;
}

QuotientElem operator-(const QuotientElem& x, const QuotientElem& y)
{
    require_same(x, y);
    QuotientElem r = x;
    for (std::size_t i = 0; i < r.residue_.size(); ++i)
        r.residue_[i] -= y.residue_[i];
    return r;
}

QuotientElem operator*(const QuotientElem& x, const QuotientElem& y)
{
    require_same(x, y);
    const auto d = x.residue_.size();
    std::vector<BigInt> dense(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (x.residue_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            mpz_addmul(dense[i + j].get_mpz_t(), x.residue_[i].get_mpz_t(),
                       y.residue_[j].get_mpz_t());
    }
    return {x.modulus_, reduce_dense(std::move(dense), *x.modulus_)};
}

bool operator==(const QuotientElem& x, const QuotientElem& y)
{
    if (x.modulus_ != y.modulus_ && !(*x.modulus_ == *y.modulus_))
        return false;
    return x.residue_ == y.residue_;
}

QuotientElem project(const LaurentPoly& p, const ModulusPtr& modulus)
{
    if (p.is_zero())
        return QuotientElem::zero(modulus);
    const int shift = std::max(0, -p.min_exponent());
    std::vector<BigInt> dense(static_cast<std::size_t>(p.max_exponent() + shift) + 1);
    for (const auto& [e, c] : p.terms())
        dense[static_cast<std::size_t>(e + shift)] = c;
    if (dense.size() < static_cast<std::size_t>(modulus->degree()))
        dense.resize(static_cast<std::size_t>(modulus->degree()));
    QuotientElem r(modulus, reduce_dense(std::move(dense), *modulus));
    for (int i = 0; i < shift; ++i)
        r = r.divided_by_a();
    return r;
}

} // namespace qseries
