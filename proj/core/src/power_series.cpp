#include "compoq/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "compoq/errors.hpp"

namespace compoq {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidArgument("a truncated series needs at least the constant coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<long> coeffs)
{
    if (coeffs.size() == 0) {
        throw InvalidArgument("a truncated series needs at least the constant coefficient");
    }
    coeffs_.reserve(coeffs.size());
    for (const long c : coeffs) {
        coeffs_.emplace_back(c);
    }
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t exponent, Integer coeff)
{
    TruncatedSeries s(order);
    if (exponent <= order) {
        s.coeffs_[exponent] = std::move(coeff);
    }
    return s;
}

const Integer& TruncatedSeries::coeff(std::size_t n) const
{
    if (n >= coeffs_.size()) {
        throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond series order " +
                                std::to_string(order()));
    }
    return coeffs_[n];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order()) {
        throw InvalidArgument("cannot extend a truncated series from order " +
                              std::to_string(this->order()) + " to " + std::to_string(order));
    }
    return TruncatedSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::alternated() const
{
    TruncatedSeries out = *this;
    for (std::size_t n = 1; n < out.coeffs_.size(); n += 2) {
        out.coeffs_[n] = -out.coeffs_[n];
    }
    return out;
}

TruncatedSeries TruncatedSeries::dilated(std::size_t m) const
{
    if (m == 0) {
        throw InvalidArgument("dilation factor must be positive");
    }
    TruncatedSeries out(order());
    for (std::size_t n = 0; n * m <= order(); ++n) {
        out.coeffs_[n * m] = coeffs_[n];
    }
    return out;
}

bool TruncatedSeries::is_one() const
{
    if (coeffs_[0] != 1) {
        return false;
    }
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Integer& c) { return c == 0; });
}

std::vector<std::size_t> TruncatedSeries::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] != 0) {
            out.push_back(n);
        }
    }
    return out;
}

std::string TruncatedSeries::to_sparse_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Integer& c = coeffs_[n];
        if (c == 0) {
            continue;
        }
        const Integer magnitude = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (n == 0) {
            os << magnitude.get_str();
            continue;
        }
        if (magnitude != 1) {
            os << magnitude.get_str() << '*';
        }
        os << 'q';
        if (n > 1) {
            os << '^' << n;
        }
    }
    if (first) {
        os << '0';
    }
    os << " + O(q^" << order() + 1 << ')';
    return os.str();
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] += rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        coeffs_[n] -= rhs.coeffs_[n];
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Integer& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    return series_mul(lhs, rhs);
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    TruncatedSeries c(order);
    // Skipping zero coefficients of a matters for the lacunary theta series.
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b[j] != 0) {
                mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
            }
        }
    }
    return c;
}

TruncatedSeries series_recip(const TruncatedSeries& a)
{
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw NotInvertible("non-invertible over exact integers: constant term " + a0.get_str());
    }
    const std::vector<std::size_t> support = a.support();
    TruncatedSeries b(a.order());
    b[0] = a0;
    Integer acc;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        acc = 0;
        for (const std::size_t k : support) {
            if (k == 0) {
                continue;
            }
            if (k > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = (a0 == 1) ? Integer(-acc) : acc;
    }
    return b;
}

ProductSpec& ProductSpec::times(Integer coefficient, std::int64_t first, std::int64_t step, int power)
{
    factors.push_back(pochhammer(std::move(coefficient), first, step, power));
    return *this;
}

PochhammerFactor pochhammer(Integer coefficient, std::int64_t first, std::int64_t step, int power)
{
    if (first < 0) {
        throw InvalidArgument("Pochhammer factor first exponent must be >= 0");
    }
    if (step < 1) {
        throw InvalidArgument("Pochhammer factor step must be positive");
    }
    return PochhammerFactor{std::move(coefficient), first, step, power};
}

namespace {

// series *= (1 - c q^e), in place, high to low.
void multiply_binomial(TruncatedSeries& s, const Integer& c, std::size_t e)
{
    if (e == 0) {
        s *= Integer(1 - c);
        return;
    }
    for (std::size_t n = s.order(); n >= e; --n) {
        if (s[n - e] != 0) {
            mpz_submul(s[n].get_mpz_t(), c.get_mpz_t(), s[n - e].get_mpz_t());
        }
    }
}

// series /= (1 - c q^e), in place, low to high.
void divide_binomial(TruncatedSeries& s, const Integer& c, std::size_t e)
{
    if (e == 0) {
        const Integer unit = 1 - c;
        if (unit != 1 && unit != -1) {
            throw NotInvertible("product factor with constant term " + unit.get_str() +
                                " is not invertible over exact integers");
        }
        s *= unit;
        return;
    }
    for (std::size_t n = e; n <= s.order(); ++n) {
        if (s[n - e] != 0) {
            mpz_addmul(s[n].get_mpz_t(), c.get_mpz_t(), s[n - e].get_mpz_t());
        }
    }
}

} // namespace

TruncatedSeries product_expand(const ProductSpec& spec, std::size_t order)
{
    TruncatedSeries s = TruncatedSeries::one(order);
    for (const auto& factor : spec.factors) {
        if (factor.step < 1 || factor.first < 0) {
            throw InvalidArgument("malformed Pochhammer factor");
        }
        const long total = static_cast<long>(factor.power) * spec.power;
        if (total == 0 || factor.coefficient == 0) {
            continue;
        }
        const long repeats = total < 0 ? -total : total;
        for (long r = 0; r < repeats; ++r) {
            for (auto e = static_cast<std::size_t>(factor.first); e <= order;
                 e += static_cast<std::size_t>(factor.step)) {
                if (total > 0) {
                    multiply_binomial(s, factor.coefficient, e);
                } else {
                    divide_binomial(s, factor.coefficient, e);
                }
            }
        }
    }
    return s;
}

} // namespace compoq
