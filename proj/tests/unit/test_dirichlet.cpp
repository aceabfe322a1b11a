#include <gtest/gtest.h>

#include <cmath>

#include <boost/math/special_functions/zeta.hpp>

#include "compoq/compositions.hpp"
#include "compoq/dirichlet.hpp"
#include "compoq/errors.hpp"
#include "compoq/partsets.hpp"

using namespace compoq;

namespace {

int mobius_oracle(std::int64_t n)
{
    int sign = 1;
    for (std::int64_t p = 2; p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            sign = -sign;
        }
    }
    return sign;
}

} // namespace

TEST(DirichletCoeffs, UnitAndProduct)
{
    const auto u = DirichletCoeffs::unit(50);
    const auto ones = DirichletCoeffs::ones(50);
    EXPECT_EQ(dirichlet_mul(u, ones), ones);
    const auto d = dirichlet_mul(ones, ones);  // divisor count
    EXPECT_EQ(d[12], 6);
    EXPECT_EQ(d[1], 1);
    EXPECT_EQ(d[49], 3);
}

TEST(CompZeta, CoefficientCases)
{
    const auto mu = comp_zeta_coeffs(naturals_from_two_set(500), -1, 500);
    for (std::int64_t n = 1; n <= 500; ++n) {
        ASSERT_EQ(mu[n], mobius_oracle(n)) << n;
    }
    EXPECT_EQ(comp_zeta_coeffs(explicit_set("empty", {}), 3, 40), DirichletCoeffs::unit(40));
    const auto twos = comp_zeta_coeffs(explicit_set("two", {2}), 1, 64);
    for (std::int64_t n = 1; n <= 64; ++n) {
        EXPECT_EQ(twos[n], (n & (n - 1)) == 0 ? 1 : 0) << n;
    }
    EXPECT_THROW(comp_zeta_coeffs(naturals_set(10), 1, 10), Divergent);
}

TEST(CompZeta, MobiusInvertsOnes)
{
    const auto mu = comp_zeta_coeffs(naturals_from_two_set(300), -1, 300);
    EXPECT_EQ(dirichlet_mul(mu, DirichletCoeffs::ones(300)), DirichletCoeffs::unit(300));
}

TEST(Mobius, Paths)
{
    EXPECT_EQ(mobius_via_compositions(6), 1);
    EXPECT_EQ(mobius_via_compositions(4), 0);
    EXPECT_EQ(mobius_via_compositions(1), 1);
    for (std::int64_t n = 1; n <= 300; ++n) {
        ASSERT_EQ(mobius(n), mobius_oracle(n));
        ASSERT_EQ(mobius_via_compositions(n), mobius(n));
    }
}

TEST(CompZetaValue, ClosedFormAgainstRiemannZeta)
{
    for (const double s : {3.0, 4.0}) {
        const auto e = comp_zeta_value(naturals_from_two_set(10000), 1, s, 10000);
        EXPECT_TRUE(e.within_bound()) << s;
        const double exact = 1.0 / (2.0 - boost::math::zeta(s));
        EXPECT_NEAR(e.closed_form, exact, 1e-6);
        EXPECT_LE(std::abs(exact - e.partial_sum), e.tail_bound + std::abs(exact - e.closed_form));
    }
}

TEST(CompZetaValue, TrivialCases)
{
    const auto empty = comp_zeta_value(explicit_set("empty", {}), 5, 2.0, 100);
    EXPECT_DOUBLE_EQ(empty.closed_form, 1.0);
    EXPECT_DOUBLE_EQ(empty.partial_sum, 1.0);
    const auto two = comp_zeta_value(explicit_set("two", {2}), 1, 2.0, 1 << 20);
    EXPECT_NEAR(two.closed_form, 4.0 / 3.0, 1e-12);
    EXPECT_TRUE(two.within_bound());
}

TEST(CompZetaValue, Preconditions)
{
    EXPECT_THROW(comp_zeta_value(naturals_from_two_set(100), 1, 1.0, 100), Divergent);
    EXPECT_THROW(comp_zeta_value(naturals_from_two_set(100), 3, 2.0, 100), Divergent);
}

TEST(PartitionZeta, PrimesGiveRiemannZeta)
{
    const auto e = partition_zeta_value(prime_set(20000), 2.0, 20000);
    EXPECT_TRUE(e.within_bound());
    EXPECT_NEAR(e.partial_sum, M_PI * M_PI / 6.0, 1e-3);
    const auto empty = partition_zeta_value(explicit_set("empty", {}), 2.0, 100);
    EXPECT_DOUBLE_EQ(empty.closed_form, 1.0);
    const auto two = partition_zeta_value(explicit_set("two", {2}), 2.0, 1 << 20);
    EXPECT_NEAR(two.closed_form, 4.0 / 3.0, 1e-12);
}

TEST(PartitionNormCounts, PrimesAreUniqueFactorization)
{
    const auto counts = partition_norm_counts(prime_set(1000), 1000);
    for (std::int64_t n = 1; n <= 1000; ++n) {
        ASSERT_EQ(counts[static_cast<std::size_t>(n)], 1) << n;
    }
}
