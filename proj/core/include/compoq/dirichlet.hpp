#ifndef COMPOQ_DIRICHLET_HPP
#define COMPOQ_DIRICHLET_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "compoq/integer.hpp"
#include "compoq/partsets.hpp"

namespace compoq {

/// Coefficients d(1..bound) of a truncated Dirichlet series sum d(n) n^{-s}.
class DirichletCoeffs {
public:
    explicit DirichletCoeffs(std::int64_t bound);

    static DirichletCoeffs unit(std::int64_t bound);
    static DirichletCoeffs ones(std::int64_t bound);

    std::int64_t bound() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    const Integer& operator[](std::int64_t n) const { return coeffs_[static_cast<std::size_t>(n)]; }
    Integer& operator[](std::int64_t n) { return coeffs_[static_cast<std::size_t>(n)]; }

    friend bool operator==(const DirichletCoeffs&, const DirichletCoeffs&) = default;

private:
    std::vector<Integer> coeffs_;  // index 0 unused
};

/// (e * f)(n) = sum_{k | n} e(k) f(n/k), through the smaller bound.
DirichletCoeffs dirichlet_mul(const DirichletCoeffs& e, const DirichletCoeffs& f);

/// d(1) = 1, d(n) = z * sum_{k in T*, k | n} d(n/k): the signed count of
/// compositions into T* with norm n, weighted by z^length.
///
/// Throws Divergent when T* contains 1.
DirichletCoeffs comp_zeta_coeffs(const PartSet& parts, const Integer& z, std::int64_t bound);

/// mu(n) by trial factorization.
int mobius(std::int64_t n);

/// mu(n) as the signed count of ordered factorizations, by explicit enumeration.
Integer mobius_via_compositions(std::int64_t n);

/// Evaluation of a composition or partition zeta function at a real s.
struct ZetaEvaluation {
    double closed_form = 0.0;   // product/reciprocal form over T* truncated at the bound
    double partial_sum = 0.0;   // sum_{n <= bound} d(n) n^{-s}
    double difference = 0.0;    // |closed_form - partial_sum|
    double tail_bound = 0.0;    // rigorous bound on difference
    double set_tail = 0.0;      // integral bound on sum_{n in T*, n > bound} n^{-s}
    double rankin_exponent = 0.0;

    bool within_bound() const noexcept { return difference <= tail_bound; }
};

/// 1/(1 - z sum_{n in T*} n^{-s}) against the partial Dirichlet sum.
///
/// Requires min T* >= 2 and |z| * sum_{n in T*} n^{-s} < 1 (checked with the
/// integral bound on the tail of T*).
ZetaEvaluation comp_zeta_value(const PartSet& parts, const Integer& z, double s, std::int64_t bound);

/// prod_{n in T*} (1 - n^{-s})^{-1} against the partial sum over partitions by norm.
ZetaEvaluation partition_zeta_value(const PartSet& parts, double s, std::int64_t bound);

/// Number of partitions into parts from T* with product n, for n <= bound.
std::vector<Integer> partition_norm_counts(const PartSet& parts, std::int64_t bound);

} // namespace compoq

#endif
