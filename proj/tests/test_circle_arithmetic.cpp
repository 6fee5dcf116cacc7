#include <gtest/gtest.h>

#include <cmath>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/continued_fraction.hpp"
#include "revivals/error.hpp"
#include "test_support.hpp"

using namespace revivals;

TEST(FracMultiple, SmallExactCases) {
    EXPECT_EQ(frac_multiple(0, 0.3), 0.0L);
    EXPECT_EQ(frac_multiple(5, 0.0), 0.0L);
    EXPECT_EQ(frac_multiple(3, 0.375), 0.125L);
    EXPECT_EQ(frac_multiple(-1, 0.375), 0.625L);
    EXPECT_EQ(frac_multiple(1, -0.25), 0.75L);
    EXPECT_EQ(frac_multiple(7, 3.0), 0.0L);
    EXPECT_EQ(frac(2.5), 0.5L);
}

TEST(FracMultiple, LargeIndexMatchesExactRational) {
    // Frozen from exact rational arithmetic on the double values.
    EXPECT_NEAR(static_cast<double>(frac_multiple(1'000'000'000, 0.3183098861837907)), 0.1837906912164442, 1e-15);
    EXPECT_NEAR(static_cast<double>(frac_multiple(987654321, 0.41421356237309515)), 0.6945904345721339, 1e-15);
    EXPECT_NEAR(static_cast<double>(frac_multiple(123456789, -7.0 / (2.0 * std::numbers::pi))), 0.4067780706703028,
                1e-15);
}

TEST(FracMultiple, AdditiveModuloOne) {
    // For δ in [1/4, 1) every {kδ} is exact in long double, so
    // {(j+k)δ} = {jδ} + {kδ} mod 1 holds bit for bit.
    for (int trial = 0; trial < 2000; ++trial) {
        const double d = testkit::uniform(0.25, 1.0);
        const auto j = testkit::uniform_int(1, 1'000'000'000);
        const auto k = testkit::uniform_int(1, 1'000'000'000);
        long double sum = frac_multiple(j, d) + frac_multiple(k, d);
        if (sum >= 1.0L) sum -= 1.0L;
        ASSERT_EQ(frac_multiple(j + k, d), sum) << "d=" << d << " j=" << j << " k=" << k;
    }
}

TEST(FracMultiple, NegationSymmetry) {
    for (int trial = 0; trial < 500; ++trial) {
        const double x = testkit::uniform(-50.0, 50.0);
        const auto k = testkit::uniform_int(1, 1'000'000);
        const long double f = frac_multiple(k, x);
        const long double g = frac_multiple(-k, x);
        ASSERT_GE(f, 0.0L);
        ASSERT_LT(f, 1.0L);
        if (f == 0.0L) {
            EXPECT_EQ(g, 0.0L);
        } else {
            EXPECT_EQ(f + g, 1.0L);
        }
        EXPECT_EQ(frac_multiple(k, -x), g);
    }
}

TEST(FracMultiple, TinyValuesFallBack) {
    EXPECT_NEAR(static_cast<double>(frac_multiple(1000, 1e-30)), 1e-27, 1e-40);
    EXPECT_THROW(frac_multiple(1, std::nan("")), ValidationError);
}

TEST(WrapAngle, RangeAndIdentity) {
    EXPECT_EQ(wrap_angle(0.0L), 0.0L);
    EXPECT_NEAR(static_cast<double>(wrap_angle(-1.0L)), 2.0 * std::numbers::pi - 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(wrap_angle(kTwoPi * 3 + 0.5L)), 0.5, 1e-15);
}

TEST(ContinuedFraction, KnownExpansions) {
    // 0.375 = 3/8 = [0; 2, 1, 2]
    const auto cf = expand_fraction(0.375, 1000);
    EXPECT_TRUE(cf.terminated);
    EXPECT_EQ(cf.terms, (std::vector<std::int64_t>{2, 1, 2}));
    const auto conv = cf.convergents();
    ASSERT_EQ(conv.size(), 4u);
    EXPECT_EQ(conv.back().p, 3);
    EXPECT_EQ(conv.back().q, 8);

    // 1/π = [0; 3, 7, 15, 1, 292, ...]
    const auto pi_cf = expand_fraction(1.0 / std::numbers::pi, 100000);
    ASSERT_GE(pi_cf.terms.size(), 5u);
    EXPECT_EQ(std::vector<std::int64_t>(pi_cf.terms.begin(), pi_cf.terms.begin() + 5),
              (std::vector<std::int64_t>{3, 7, 15, 1, 292}));
    EXPECT_FALSE(pi_cf.terminated);
    const auto pc = pi_cf.convergents();
    EXPECT_EQ(pc[4].p, 113);
    EXPECT_EQ(pc[4].q, 355);

    // Golden mean: all ones.
    const auto g = expand_fraction((std::sqrt(5.0) - 1.0) / 2.0, 1'000'000);
    for (std::size_t i = 0; i + 1 < g.terms.size(); ++i) EXPECT_EQ(g.terms[i], 1);
}

TEST(ContinuedFraction, NegativeUsesFractionalPart) {
    // {-0.625} = 0.375
    EXPECT_EQ(expand_fraction(-0.625, 1000).terms, (std::vector<std::int64_t>{2, 1, 2}));
    EXPECT_TRUE(expand_fraction(4.0, 10).terms.empty());
}

TEST(ContinuedFraction, ConvergentsAreBestApproximations) {
    // |q_n x − p_n| decreases strictly along the convergents.
    for (int trial = 0; trial < 200; ++trial) {
        const double x = testkit::uniform(0.0, 1.0);
        const auto conv = expand_fraction(x, 1'000'000'000).convergents();
        long double prev = 2.0L;
        for (std::size_t n = 1; n < conv.size() && conv[n].q <= 1'000'000'000; ++n) {
            const long double f = frac_multiple(conv[n].q, x);
            const long double dist = std::min(f, 1.0L - f);
            ASSERT_LT(dist, prev) << "x=" << x << " n=" << n;
            prev = dist;
        }
    }
}
