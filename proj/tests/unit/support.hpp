#ifndef COMPOQ_TESTS_SUPPORT_HPP
#define COMPOQ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "compoq/partsets.hpp"
#include "compoq/power_series.hpp"

namespace compoq::test {

using Ints = std::vector<std::int64_t>;

inline Ints members(const PartSet& s) { return {s.members().begin(), s.members().end()}; }

inline std::vector<long> as_longs(const TruncatedSeries& s)
{
    std::vector<long> out;
    for (const auto& c : s.coeffs()) {
        out.push_back(c.get_si());
    }
    return out;
}

inline std::vector<long> as_longs(const std::vector<Integer>& v)
{
    std::vector<long> out;
    for (const auto& c : v) {
        out.push_back(c.get_si());
    }
    return out;
}

} // namespace compoq::test

#endif
