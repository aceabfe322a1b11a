#include <gtest/gtest.h>

#include "compoq/errors.hpp"
#include "compoq/qgen.hpp"
#include "support.hpp"

using namespace compoq;
using compoq::test::as_longs;
using L = std::vector<long>;

TEST(Theta, ClassicalSpecialCases)
{
    EXPECT_EQ(as_longs(theta_sum({1, 3, 1, 1}, 10)), (L{1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(as_longs(theta_sum({1, 1, 1, 1}, 9)), (L{1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    EXPECT_EQ(as_longs(theta_sum({1, 2, -1, -1}, 7)), (L{1, -1, -1, 0, 0, 1, 0, 1}));
}

TEST(Theta, ProductFormsOfPsiAndPhi)
{
    ProductSpec psi;  // (q;q)(-q;q)^2
    psi.times(1, 1, 1).times(-1, 1, 1, 2);
    EXPECT_EQ(theta_product({1, 3, 1, 1}, 120), product_expand(psi, 120));
    ProductSpec phi;  // (q^2;q^2)(-q;q^2)^2
    phi.times(1, 2, 2).times(-1, 1, 2, 2);
    EXPECT_EQ(theta_product({1, 1, 1, 1}, 120), product_expand(phi, 120));
}

TEST(Theta, TripleProductAllSigns)
{
    for (int a = 1; a <= 6; ++a) {
        for (int b = 1; b <= 6; ++b) {
            for (int sa : {1, -1}) {
                for (int sb : {1, -1}) {
                    const ThetaSpec spec{a, b, sa, sb};
                    EXPECT_EQ(theta_sum(spec, 150), theta_product(spec, 150))
                        << a << ' ' << b << ' ' << sa << ' ' << sb;
                }
            }
        }
    }
}

TEST(Theta, Validation)
{
    EXPECT_THROW(theta_sum({0, 1, 1, 1}, 5), InvalidArgument);
    EXPECT_THROW(theta_sum({1, 1, 2, 1}, 5), InvalidArgument);
}

TEST(NamedSeries, SmallCoefficients)
{
    EXPECT_EQ(as_longs(named_gf(NamedSeries::partition, 5)), (L{1, 1, 2, 3, 5, 7}));
    EXPECT_EQ(named_gf(NamedSeries::p3, 5)[5], 108);
    EXPECT_EQ(as_longs(named_gf(NamedSeries::overpartition, 2)), (L{1, 2, 4}));
    EXPECT_EQ(as_longs(named_gf(NamedSeries::r, 7)), (L{1, 5, 18, 55, 149, 371, 867, 1923}));
    EXPECT_EQ(as_longs(named_gf(NamedSeries::s, 7)), (L{1, 2, 4, 8, 16, 28, 48, 80}));
    EXPECT_THROW(named_gf(NamedSeries::p_sk, 5, 4), InvalidArgument);
}

TEST(NamedSeries, PodFormsAgree)
{
    EXPECT_EQ(named_gf(NamedSeries::pod, 200), named_gf(NamedSeries::pod_classical, 200));
    EXPECT_EQ(named_gf(NamedSeries::pod, 200), named_gf(NamedSeries::p_sk, 200, 6));
    EXPECT_EQ(named_gf(NamedSeries::partition, 200), named_gf(NamedSeries::p_sk, 200, 5));
}

TEST(NamedSeries, ParseRoundTrip)
{
    for (const auto id : all_named_series()) {
        EXPECT_EQ(parse_named_series(to_string(id)), id);
    }
    EXPECT_THROW(parse_named_series("zzz"), InvalidArgument);
}

TEST(JacobiCube, SumSide)
{
    EXPECT_EQ(as_longs(jacobi_cube(6)), (L{1, -3, 0, 5, 0, 0, -7}));
    ProductSpec cube;
    cube.times(1, 1, 1, 3);
    EXPECT_EQ(jacobi_cube(200), product_expand(cube, 200));
}

TEST(SumSides, MatchProducts)
{
    // Sum sides are the reciprocals of the r and s generating functions.
    EXPECT_TRUE(series_mul(r_sum_side(150), named_gf(NamedSeries::r, 150)).is_one());
    EXPECT_TRUE(series_mul(s_sum_side(150), named_gf(NamedSeries::s, 150)).is_one());
}

TEST(RrThetaFactor, SmallCases)
{
    EXPECT_EQ(as_longs(rr_theta_factor(12)), (L{1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0}));
    EXPECT_EQ(rr_theta_factor(200), theta_sum({2, 3, -1, -1}, 200));
}

TEST(RrThetaFactor, PiecewiseFormAgrees)
{
    const auto a = rr_theta_factor(2000);
    for (std::int64_t i = 0; i <= 2000; ++i) {
        ASSERT_EQ(a[static_cast<std::size_t>(i)], rr_piecewise_coefficient(i)) << "i=" << i;
    }
    EXPECT_EQ(rr_piecewise_coefficient(0), 1);
    EXPECT_EQ(rr_piecewise_coefficient(2), -1);
}

TEST(RrThetaFactor, FactorsTheDenominator)
{
    // (q,q^4;q^5) (q^2,q^3;q^5) (q^5;q^5) ... the quotient of (q;q) by f(-q^2,-q^3) is (q,q^4;q^5).
    ProductSpec euler;
    euler.times(1, 1, 1);
    ProductSpec rr_den = named_gf_spec(NamedSeries::rr);
    rr_den.power = -1;
    EXPECT_EQ(series_mul(product_expand(rr_den, 150), rr_theta_factor(150)), product_expand(euler, 150));
}
