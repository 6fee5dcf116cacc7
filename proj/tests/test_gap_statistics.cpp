#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/error.hpp"
#include "revivals/gap_statistics.hpp"
#include "test_support.hpp"

using namespace revivals;
using std::numbers::pi;

TEST(FirstReturns, Examples) {
    const auto a = first_return_indices(1.0 / pi, 0.1);
    EXPECT_EQ(a.k1, 16);
    EXPECT_EQ(a.k2, 3);

    const auto b = first_return_indices(std::sqrt(2.0) - 1.0, 0.15);
    EXPECT_EQ(b.k1, 5);
    EXPECT_EQ(b.k2, 7);
}

TEST(FirstReturns, DistinctForIrrationals) {
    for (int trial = 0; trial < 2000; ++trial) {
        const double d = testkit::uniform(0.0, 1.0);
        const double e = testkit::uniform(0.01, 0.49);
        const auto r = first_return_indices(d, e);
        EXPECT_NE(r.k1, r.k2) << d << " " << e;
    }
}

TEST(FirstReturns, ScanMatchesBruteForce) {
    for (int trial = 0; trial < 2000; ++trial) {
        const double d = testkit::uniform(0.0, 1.0);
        const double e = testkit::uniform(0.005, 0.49);
        const auto r = first_return_indices(d, e);
        const auto [k1, k2] = testkit::brute_first_returns(d, e);
        EXPECT_EQ(r.k1, k1) << d << " " << e;
        EXPECT_EQ(r.k2, k2) << d << " " << e;
    }
}

TEST(FirstReturns, FastPathMatchesScan) {
    for (int trial = 0; trial < 3000; ++trial) {
        const double d = testkit::uniform(0.0, 1.0);
        const double e = std::exp(testkit::uniform(std::log(1e-4), std::log(0.49)));
        const auto s = first_return_indices(d, e, ReturnSearch::scan);
        const auto f = first_return_indices(d, e, ReturnSearch::continued_fraction);
        EXPECT_EQ(s.k1, f.k1) << d << " " << e;
        EXPECT_EQ(s.k2, f.k2) << d << " " << e;
    }
    // Dyadic rationals only: a double near 1/3 drifts off the periodic orbit and
    // its missing return sits near the index ceiling, which the scan then walks.
    for (double d : {0.25, 0.375, 0.8125, 0.4142135623730951}) {
        for (double e : {0.05, 0.1, 0.2, 0.3}) {
            // Periodic orbits may have no upper return at all; both paths must then agree on failing.
            FirstReturns s, f;
            bool s_ok = true, f_ok = true;
            try { s = first_return_indices(d, e, ReturnSearch::scan); } catch (const NumericalError&) { s_ok = false; }
            try {
                f = first_return_indices(d, e, ReturnSearch::continued_fraction);
            } catch (const NumericalError&) {
                f_ok = false;
            }
            ASSERT_EQ(s_ok, f_ok) << d << " " << e;
            EXPECT_EQ(s.k1, f.k1) << d << " " << e;
            EXPECT_EQ(s.k2, f.k2) << d << " " << e;
        }
    }
    EXPECT_EQ(first_return_indices(0.375, 0.2).k2, 5);  // {5·3/8} = 7/8
}

TEST(FirstReturns, NoUpperReturnForHalf) {
    // {k/2} is 0 or 1/2: the lower window is hit at k = 2, the upper never.
    EXPECT_THROW(first_return_indices(0.5, 0.1), NumericalError);
    EXPECT_THROW(first_return_indices(0.5, 0.1, ReturnSearch::continued_fraction), NumericalError);
    EXPECT_THROW(first_return_indices(0.0, 0.1), NumericalError);
}

TEST(FirstReturns, SearchBound) {
    EXPECT_GE(first_return_search_bound(1.0 / pi, 0.1), 19);
    EXPECT_THROW(first_return_indices(0.3, 0.6), ValidationError);
    EXPECT_THROW(first_return_indices(1.2, 0.1), ValidationError);
}

TEST(GapDistribution, InversePi) {
    const auto g = gap_distribution(1.0 / pi, 0.1);
    EXPECT_EQ(g.k1, 16);
    EXPECT_EQ(g.k2, 3);
    EXPECT_NEAR(static_cast<double>(g.frac_k1), 0.09295817894065106, 1e-15);
    EXPECT_NEAR(static_cast<double>(g.frac_k2), 0.954929658551372, 1e-15);
    EXPECT_NEAR(g.f_k1, 0.07041821059348946, 1e-12);
    EXPECT_NEAR(g.f_k2, 0.5492965855137207, 1e-12);
    EXPECT_NEAR(g.f_k1_plus_k2, 0.3802852038927898, 1e-12);
    EXPECT_NEAR(mean_recurrence(g), 10.0, 1e-10);

    const auto e = g.entries();
    ASSERT_EQ(e.size(), 3u);
    EXPECT_EQ(e[0].gap, 3);
    EXPECT_EQ(e[1].gap, 16);
    EXPECT_EQ(e[2].gap, 19);
    EXPECT_EQ(g.probability(19), g.f_k1_plus_k2);
    EXPECT_EQ(g.probability(4), 0.0);
}

TEST(GapDistribution, SqrtTwo) {
    const auto g = gap_distribution(std::sqrt(2.0) - 1.0, 0.15);
    EXPECT_EQ(g.k1, 5);
    EXPECT_EQ(g.k2, 7);
    EXPECT_NEAR(g.f_k1, 0.5262145875634988, 1e-12);
    EXPECT_NEAR(g.f_k2, 0.32996624407776826, 1e-12);
    EXPECT_NEAR(g.f_k1_plus_k2, 0.14381916835873293, 1e-12);
    EXPECT_NEAR(mean_recurrence(g), 1.0 / 0.15, 1e-10);
}

TEST(GapDistribution, RandomDistributionsAreValid) {
    for (int trial = 0; trial < 1000; ++trial) {
        const double d = testkit::uniform(0.001, 0.999);
        const double e = testkit::uniform(0.01, 0.49);
        const auto g = gap_distribution(d, e);
        EXPECT_GE(g.f_k1, -1e-12);
        EXPECT_GE(g.f_k2, -1e-12);
        EXPECT_GE(g.f_k1_plus_k2, -1e-12);
        EXPECT_NEAR(g.f_k1 + g.f_k2 + g.f_k1_plus_k2, 1.0, 1e-12);
        EXPECT_NEAR(mean_recurrence(g), 1.0 / e, 1e-9 / e);
    }
}

TEST(GapDistribution, RejectsPeriodicOrbits) {
    EXPECT_THROW(gap_distribution(0.25, 0.1), ValidationError);
    EXPECT_THROW(gap_distribution(0.0, 0.1), ValidationError);
}

TEST(GapDistribution, TwoGapBoundary) {
    const double delta = 1.0 / pi;
    const double eps2 = two_gap_epsilon(delta, 0.1);
    EXPECT_NEAR(eps2, 0.09295817894065106 + 1.0 - 0.954929658551372, 1e-15);
    const auto g = gap_distribution(delta, eps2);
    EXPECT_EQ(g.k1, 16);
    EXPECT_EQ(g.k2, 3);
    EXPECT_NEAR(g.f_k1_plus_k2, 0.0, 1e-12);

    const auto rec = empirical_gaps(delta, eps2, 1'000'000);
    EXPECT_EQ(rec.gap_counts.size(), 2u);
    EXPECT_TRUE(rec.gap_counts.contains(3));
    EXPECT_TRUE(rec.gap_counts.contains(16));
}

TEST(Identity, HoldsForFirstReturns) {
    for (int trial = 0; trial < 2000; ++trial) {
        const double d = testkit::uniform(0.001, 0.999);
        const double e = testkit::uniform(0.005, 0.49);
        const auto r = first_return_indices(d, e);
        EXPECT_NEAR(verify_identity(r.k1, r.k2, d), 0.0, 1e-9) << d << " " << e;
    }
}

TEST(Identity, FailsForOtherPairs) {
    const double d = 1.0 / pi;
    EXPECT_GT(std::abs(verify_identity(16, 4, d)), 0.1);
    EXPECT_GT(std::abs(verify_identity(16, 5, d)), 0.1);
}

TEST(EmpiricalGaps, MatchesAnalyticWeights) {
    constexpr std::int64_t K = 1'000'000;
    const auto g = gap_distribution(1.0 / pi, 0.1);
    const auto rec = empirical_gaps(1.0 / pi, 0.1, K);
    EXPECT_EQ(rec.hit_indices.front(), 16);
    EXPECT_EQ(rec.transient_discarded, 15);
    EXPECT_EQ(rec.gap_counts.size(), 3u);
    const double tol = 3.0 / std::sqrt(static_cast<double>(rec.gap_total()));
    const auto freq = rec.frequencies();
    for (const auto& e : g.entries()) {
        ASSERT_TRUE(freq.contains(e.gap));
        EXPECT_NEAR(freq.at(e.gap), e.probability, tol);
    }
    EXPECT_NEAR(rec.mean_gap(), 10.0, 3.0 * rec.mean_gap_standard_error() + 1e-3);
}

TEST(EmpiricalGaps, RationalOrbit) {
    const auto rec = empirical_gaps(0.5, 0.1, 1000);
    ASSERT_EQ(rec.gap_counts.size(), 1u);
    EXPECT_EQ(rec.gap_counts.begin()->first, 2);
    EXPECT_EQ(rec.gap_counts.begin()->second, 499);
    EXPECT_DOUBLE_EQ(rec.mean_gap(), 2.0);
    EXPECT_EQ(rec.transient_discarded, 1);
}

TEST(EmpiricalGaps, NoHits) {
    EXPECT_THROW(empirical_gaps(0.5, 0.1, 1), NumericalError);
    EXPECT_THROW(empirical_gaps(0.3, 0.1, 0), ValidationError);
}

TEST(EmpiricalGaps, ExactRationalOverload) {
    // 1/3 as a double sits just below 1/3, so {3k·δ} lands near 1 and the
    // lower window is never entered; the integer form is exact.
    EXPECT_THROW(empirical_gaps(1.0 / 3.0, 0.1, 1000), NumericalError);
    const auto rec = empirical_gaps(1, 3, 0.1, 1000);
    ASSERT_EQ(rec.gap_counts.size(), 1u);
    EXPECT_EQ(rec.gap_counts.begin()->first, 3);
    const auto neg = empirical_gaps(-7, 4, 0.1, 100);  // {−7k/4} = {k/4}
    EXPECT_EQ(neg.hit_indices.front(), 4);
    EXPECT_THROW(empirical_gaps(1, 0, 0.1, 10), ValidationError);
}
