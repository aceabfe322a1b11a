#ifndef COMPOQ_COMPOSITIONS_HPP
#define COMPOQ_COMPOSITIONS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "compoq/integer.hpp"
#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"

namespace compoq {

/// An ordered sequence of positive parts. The empty composition has size 0,
/// length 0 and norm 1.
struct Composition {
    std::vector<std::int64_t> parts;

    std::int64_t size() const;
    std::size_t length() const noexcept { return parts.size(); }
    std::size_t multiplicity(std::int64_t part) const;
    std::map<std::int64_t, std::size_t> multiplicities() const;
    Integer norm() const;

    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Weight attached to each part value; a composition weighs the product of
/// its parts' weights.
class WeightRule {
public:
    using Function = std::function<Integer(std::int64_t)>;

    WeightRule(std::string description, Function weight);

    /// Every part weighs z.
    static WeightRule constant(const Integer& z);

    /// Listed parts take their mapped weight; every other part weighs `fallback`.
    static WeightRule from_map(std::map<std::int64_t, Integer> weights, Integer fallback = 0);

    /// The generic reciprocal weight -a_m / a_0 for a series with a_0 = +-1.
    static WeightRule from_series(const TruncatedSeries& series);

    Integer operator()(std::int64_t part) const { return weight_(part); }
    Integer weight(const Composition& c) const;
    const std::string& description() const noexcept { return description_; }

private:
    std::string description_;
    Function weight_;
};

enum class StatKind {
    length,       // (-1)^l
    length_z,     // z^l
    star_length,  // (-1)^{l*_k}, parts in P*_k
    hat_length,   // (-1)^{l-hat}, parts in P-hat
    p3,           // part j(j+1)/2 weighs (-1)^{j+1}(2j+1)
    r,            // part j(3j-1)/2 weighs 6j - 1
    s             // part j(3j+2) weighs -(1 + 3j)
};

/// WeightRule reproducing a named statistic. `k` is used by star_length,
/// `z` by length_z.
WeightRule stat_weight(StatKind kind, int k = 0, const Integer& z = 1);

StatKind parse_stat_kind(const std::string& name);
std::string to_string(StatKind kind);

/// Visits every composition of n with parts in S, in lexicographic order.
/// The visitor receives the parts as a span valid only during the call.
void for_each_composition(const PartSet& parts, std::int64_t n,
                          const std::function<void(std::span<const std::int64_t>)>& visit);

std::vector<Composition> enumerate_compositions(const PartSet& parts, std::int64_t n);

/// Brute-force sum of w(c) over compositions of n into S.
Integer weighted_sum_bruteforce(const PartSet& parts, const WeightRule& weight, std::int64_t n);

/// DP values d_0..d_max with d_0 = 1 and d_n = sum_{m in S, m <= n} w(m) d_{n-m}.
std::vector<Integer> weighted_sums(const PartSet& parts, const WeightRule& weight, std::int64_t max_n);

/// Single DP value; equals weighted_sum_bruteforce.
Integer weighted_sum(const PartSet& parts, const WeightRule& weight, std::int64_t n);

/// 1 - sum_{m in S} w(m) q^m through q^order; its reciprocal generates
/// the weighted composition sums.
TruncatedSeries weight_denominator(const PartSet& parts, const WeightRule& weight, std::size_t order);

/// l(c)! / prod_i m_i(c)!, the number of rearrangements of c.
Integer multinomial_count(const Composition& c);

struct TransferCheck {
    bool equal = false;
    Integer partition_side;    // scale * sum over partitions of g(lambda)
    Integer composition_side;  // scale * sum over compositions of g-hat(c)
    Integer scale;             // B!, clears every l! denominator
};

/// Compares the partition sum of g(lambda) = prod weight(lambda_i) against the
/// composition sum of g-hat(c) = g(c) * prod m_i! / l! over |.| <= bound.
/// Parts missing from the map weigh zero.
TransferCheck symm_transfer_check(const std::map<std::int64_t, Integer>& weights, std::int64_t bound);

/// Visits every ordered factorization of n into factors >= 2 (empty for n = 1).
void for_each_ordered_factorization(std::int64_t n,
                                    const std::function<void(std::span<const std::int64_t>)>& visit);

std::vector<Composition> ordered_factorizations(std::int64_t n);

/// Memoized sum of (-1)^{l(c)} over ordered factorizations, for n up to 10^6.
class SignedFactorizationCounter {
public:
    Integer operator()(std::int64_t n);

private:
    std::unordered_map<std::int64_t, Integer> memo_;
};

} // namespace compoq

#endif
