#include <gtest/gtest.h>

#include "compoq/errors.hpp"
#include "compoq/partitions.hpp"
#include "compoq/partsets.hpp"
#include "compoq/qgen.hpp"
#include "support.hpp"

using namespace compoq;

namespace {

// Plain recursion on the largest allowed part.
long naive_partitions(const std::vector<std::int64_t>& parts, std::int64_t n, std::size_t top)
{
    if (n == 0) {
        return 1;
    }
    long total = 0;
    for (std::size_t i = 0; i < top; ++i) {
        if (parts[i] <= n) {
            total += naive_partitions(parts, n - parts[i], i + 1);
        }
    }
    return total;
}

} // namespace

TEST(CountPs, SmallCases)
{
    EXPECT_EQ(count_ps(naturals_set(5), 5), 7);
    EXPECT_EQ(count_ps(residue_set_sk(6, 4), 4), 3);
    EXPECT_EQ(count_ps(polygonal_set(5, 10), 0), 1);
    EXPECT_THROW(counts_ps(naturals_set(5), 6), InvalidArgument);
}

TEST(CountPs, MatchesRecursionAndProduct)
{
    for (int k = 5; k <= 12; ++k) {
        const PartSet s = residue_set_sk(k, 40);
        const std::vector<std::int64_t> parts(s.members().begin(), s.members().end());
        const auto dp = counts_ps(s, 40);
        const auto gf = named_gf(NamedSeries::p_sk, 40, k);
        for (std::int64_t n = 0; n <= 40; ++n) {
            EXPECT_EQ(dp[static_cast<std::size_t>(n)], naive_partitions(parts, n, parts.size())) << k << ' ' << n;
            EXPECT_EQ(dp[static_cast<std::size_t>(n)], gf[static_cast<std::size_t>(n)]);
        }
    }
}

TEST(CountPs, NondecreasingForSk)
{
    for (int k = 5; k <= 12; ++k) {
        const auto v = counts_ps(residue_set_sk(k, 300), 300);
        for (std::size_t n = 3; n < v.size(); ++n) {
            ASSERT_GE(v[n], v[n - 1]) << "k=" << k << " n=" << n;
        }
    }
}

TEST(Pod, SmallCasesAndEnumeration)
{
    EXPECT_EQ(count_pod(3), 2);
    EXPECT_EQ(count_pod(0), 1);
    const auto dp = counts_pod(60);
    const auto sk6 = counts_ps(residue_set_sk(6, 60), 60);
    EXPECT_EQ(dp, sk6);
    for (std::int64_t n = 0; n <= 30; ++n) {
        EXPECT_EQ(count_pod_enumerated(n), dp[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(Overpartitions, SmallCasesAndEnumeration)
{
    EXPECT_EQ(count_overpartitions(0), 1);
    EXPECT_EQ(count_overpartitions(1), 2);
    EXPECT_EQ(count_overpartitions(2), 4);
    const auto gf = named_gf(NamedSeries::overpartition, 60);
    for (std::int64_t n = 0; n <= 20; ++n) {
        EXPECT_EQ(count_decorated(n, overpartition_palette()), gf[static_cast<std::size_t>(n)]) << n;
    }
    EXPECT_EQ(count_overpartitions(60), gf[60]);
}

TEST(Overpartitions, EnumeratedObjectsAreWellFormed)
{
    std::size_t seen = 0;
    for_each_decorated_partition(6, overpartition_palette(), [&](const PartitionMultiset& p) {
        ++seen;
        EXPECT_EQ(p.size(), 6);
        for (std::size_t i = 1; i < p.parts.size(); ++i) {
            EXPECT_GE(p.parts[i - 1].value, p.parts[i].value);
        }
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
                EXPECT_FALSE(p.parts[i].overlined && p.parts[j].overlined && p.parts[i].value == p.parts[j].value);
            }
        }
    });
    EXPECT_EQ(Integer(static_cast<long>(seen)), count_overpartitions(6));
}

TEST(Colored, SmallCases)
{
    EXPECT_EQ(count_colored(5, 3), 108);
    EXPECT_EQ(count_colored(0, 7), 1);
    EXPECT_EQ(count_colored(1, 3), 3);
    const auto p3 = named_gf(NamedSeries::p3, 40);
    EXPECT_EQ(counts_colored(40, 3), std::vector<Integer>(p3.coeffs().begin(), p3.coeffs().end()));
    for (std::int64_t n = 0; n <= 12; ++n) {
        EXPECT_EQ(count_decorated(n, colored_palette(3)), count_colored(n, 3));
    }
}

TEST(RAndS, DecoratedMatchesSeries)
{
    const auto r = named_gf(NamedSeries::r, 14);
    const auto s = named_gf(NamedSeries::s, 14);
    for (std::int64_t n = 0; n <= 14; ++n) {
        EXPECT_EQ(count_decorated(n, r_palette()), r[static_cast<std::size_t>(n)]) << n;
        EXPECT_EQ(count_decorated(n, s_palette()), s[static_cast<std::size_t>(n)]) << n;
    }
}

TEST(RogersRamanujan, ResidueAndGapCounts)
{
    EXPECT_EQ(count_rr(4), 2);
    EXPECT_EQ(count_rr(0), 1);
    const auto rr = counts_rr(30);
    for (std::int64_t n = 0; n <= 30; ++n) {
        EXPECT_EQ(count_rr_gap(n), rr[static_cast<std::size_t>(n)]) << n;
    }
}
