#ifndef COMPOQ_POWER_SERIES_HPP
#define COMPOQ_POWER_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "compoq/integer.hpp"

namespace compoq {

/// A formal power series in q known exactly through q^order.
///
/// Binary operations truncate to the smaller of the two orders.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    explicit TruncatedSeries(std::vector<Integer> coeffs);
    TruncatedSeries(std::initializer_list<long> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t order, std::size_t exponent, Integer coeff = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
    Integer& operator[](std::size_t n) { return coeffs_[n]; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^n; zero-based, throws past the known order.
    const Integer& coeff(std::size_t n) const;

    TruncatedSeries truncated(std::size_t order) const;

    /// The series with q replaced by -q.
    TruncatedSeries alternated() const;

    /// The series with q replaced by q^m, known through the same order.
    TruncatedSeries dilated(std::size_t m) const;

    bool is_one() const;

    /// Nonzero exponents, ascending.
    std::vector<std::size_t> support() const;

    /// Sparse text such as "1 - q - q^4 + 2*q^10".
    std::string to_sparse_string() const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Integer& scalar);

    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
    friend TruncatedSeries operator*(TruncatedSeries lhs, const Integer& rhs) { return lhs *= rhs; }
    friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

    friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Cauchy product through min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Reciprocal of a series with constant term +1 or -1.
///
/// b_0 = a_0, b_n = -a_0 * sum_{k=1..n} a_k b_{n-k}. Throws NotInvertible
/// for any other constant term.
TruncatedSeries series_recip(const TruncatedSeries& a);

/// One infinite product factor (coefficient * q^first; q^step)_inf ^ power,
/// that is prod_{n >= 0} (1 - coefficient * q^(first + n*step))^power.
struct PochhammerFactor {
    Integer coefficient = 1;
    std::int64_t first = 1;
    std::int64_t step = 1;
    int power = 1;
};

/// A product of Pochhammer factors, raised as a whole to `power`.
struct ProductSpec {
    std::vector<PochhammerFactor> factors;
    int power = 1;

    ProductSpec& times(Integer coefficient, std::int64_t first, std::int64_t step, int power = 1);
};

/// (z q^first; q^step)_inf with z = coefficient.
PochhammerFactor pochhammer(Integer coefficient, std::int64_t first, std::int64_t step, int power = 1);

/// Expands a product spec through q^order.
///
/// Factors with negative total power are divided out, which requires a unit
/// constant term in each binomial (always true unless first == 0).
TruncatedSeries product_expand(const ProductSpec& spec, std::size_t order);

} // namespace compoq

#endif
