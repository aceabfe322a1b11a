#ifndef COMPOQ_ASYMPTOTICS_HPP
#define COMPOQ_ASYMPTOTICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "compoq/integer.hpp"

namespace compoq {

/// 50-digit binary float; e^{pi sqrt(2n)} stays representable far past n = 10^5.
using Real = boost::multiprecision::cpp_bin_float_50;

enum class AsymptoticId { p_sk, p3, r, s, rr };

AsymptoticId parse_asymptotic_id(const std::string& name);
std::string to_string(AsymptoticId id);

/// Leading-order closed forms:
///   p_sk: csc(pi/(k-2)) exp(pi sqrt(2n/(k-2))) / (8n)
///   p3:   exp(pi sqrt(2n)) / (8 sqrt(2) n^{3/2})
///   r:    exp(2 pi sqrt(2n/3)) / (12 sqrt(2) n^{3/2})
///   s:    exp(2 pi sqrt(n/3)) / (6 n^{3/2})
///   rr:   exp(2 pi sqrt(n/15)) / (4 15^{1/4} sqrt((5 - sqrt 5)/8) n^{3/4})
Real asymptotic_value(AsymptoticId id, std::int64_t n, int k = 0);

/// Exact values 0..max_n for the function the formula approximates.
std::vector<Integer> exact_values(AsymptoticId id, std::int64_t max_n, int k = 0);

struct RatioRow {
    std::int64_t n = 0;
    Integer exact;
    Real asymptotic;
    Real ratio;
};

inline constexpr std::int64_t kMaxExactN = 100'000;

/// Exact/asymptotic ratios at each n. Throws Infeasible above kMaxExactN.
std::vector<RatioRow> ratio_report(AsymptoticId id, std::span<const std::int64_t> ns, int k = 0);

/// Decimal text with the given number of significant digits.
std::string format_significant(const Real& value, int digits = 6);

} // namespace compoq

#endif
