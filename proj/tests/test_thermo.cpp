#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "memtp/errors.hpp"
#include "memtp/thermo.hpp"

using namespace memtp;

namespace {

Distribution random_dist(std::mt19937_64& rng, std::size_t d) {
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> v(d);
    double s = 0;
    for (double& x : v) s += (x = ex(rng));
    for (double& x : v) x /= s;
    return Distribution(v);
}

Distribution random_gibbs(std::mt19937_64& rng, std::size_t d) {
    std::uniform_real_distribution<double> e(0.0, 2.0), b(0.0, 2.0);
    std::vector<double> en(d);
    for (double& x : en) x = e(rng);
    return gibbs_state(EnergySpectrum(en), b(rng));
}

} // namespace

TEST(Gibbs, UniformAtZeroBeta) {
    const auto g = gibbs_state(EnergySpectrum{0.0, 3.7}, 0.0);
    EXPECT_DOUBLE_EQ(g[0], 0.5);
    EXPECT_DOUBLE_EQ(g[1], 0.5);
}

TEST(Gibbs, TwoThirdsOneThird) {
    const auto g = gibbs_state(EnergySpectrum{0.0, std::log(2.0)}, 1.0);
    EXPECT_NEAR(g[0], 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(g[1], 1.0 / 3.0, 1e-15);
}

TEST(Gibbs, EquidistantSpectrum) {
    const auto g = gibbs_state(EnergySpectrum{0.0, 1.0, 2.0}, 0.3);
    EXPECT_NEAR(g[1] / g[0], std::exp(-0.3), 1e-15);
    EXPECT_NEAR(g[2] / g[0], std::exp(-0.6), 1e-15);
}

TEST(Gibbs, RejectsBadBeta) {
    EXPECT_THROW(gibbs_state(EnergySpectrum{0.0, 1.0}, NAN), InvalidInput);
    EXPECT_THROW(gibbs_state(EnergySpectrum{0.0, 1.0}, INFINITY), InvalidInput);
    EXPECT_THROW(gibbs_state(EnergySpectrum{0.0, 1.0}, -1.0), InvalidInput);
    EXPECT_THROW(EnergySpectrum({0.0, NAN}), InvalidInput);
    EXPECT_THROW(gibbs_state(EnergySpectrum{0.0, 1e6}, 1e3), InvalidInput);
}

TEST(Distribution, ClampsTinyNegatives) {
    const Distribution p{1.0 + 5e-13, -5e-13};
    EXPECT_EQ(p[1], 0.0);
    EXPECT_THROW(Distribution({1.1, -0.1}), InvalidInput);
    EXPECT_THROW(Distribution({0.5, 0.4}), InvalidInput);
}

TEST(BetaOrder, ThermalStateIsIdentity) {
    const auto g = gibbs_state(EnergySpectrum{0.0, 0.4, 1.3, 2.0}, 0.8);
    EXPECT_EQ(beta_order(g, g).order, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(BetaOrder, SortsByValueAtZeroBeta) {
    const Distribution p{0.2, 0.5, 0.3};
    const auto g = gibbs_state(EnergySpectrum{0, 0, 0}, 0.0);
    EXPECT_EQ(beta_order(p, g).order, (std::vector<std::size_t>{1, 2, 0}));
}

TEST(BetaOrder, QutritExampleState) {
    const Distribution p{0.7, 0.2, 0.1};
    const auto g = gibbs_state(EnergySpectrum{0, 1, 2}, 0.3);
    EXPECT_EQ(beta_order(p, g).order, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(beta_order(p, g).positions(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(BetaOrder, RejectsZeroGamma) {
    EXPECT_THROW(beta_order(Distribution{0.5, 0.5}, Distribution{1.0, 0.0}), InvalidInput);
}

TEST(Curve, DiagonalForThermalState) {
    const auto g = gibbs_state(EnergySpectrum{0, 1, 2}, 0.7);
    const auto c = thermo_curve(g, g);
    for (const auto& k : c.knots) EXPECT_NEAR(k.x, k.y, 1e-15);
    EXPECT_NEAR(curve_eval(c, 0.3), 0.3, 1e-15);
}

TEST(Curve, PureStateAtZeroBeta) {
    const auto c = thermo_curve(Distribution{1.0, 0.0}, Distribution{0.5, 0.5});
    ASSERT_EQ(c.knots.size(), 3u);
    EXPECT_DOUBLE_EQ(c.knots[1].x, 0.5);
    EXPECT_DOUBLE_EQ(c.knots[1].y, 1.0);
    EXPECT_DOUBLE_EQ(curve_eval(c, 0.25), 0.5);
}

TEST(Curve, KnotsFollowCumulativeGibbs) {
    const Distribution p{0.7, 0.2, 0.1};
    const auto g = gibbs_state(EnergySpectrum{0, 1, 2}, 0.3);
    const auto c = thermo_curve(p, g);
    EXPECT_NEAR(c.knots[1].x, g[0], 1e-15);
    EXPECT_NEAR(c.knots[2].x, g[0] + g[1], 1e-15);
    EXPECT_NEAR(c.knots[1].y, 0.7, 1e-15);
    EXPECT_NEAR(c.knots[2].y, 0.9, 1e-15);
}

TEST(Curve, EndpointsAndDomain) {
    std::mt19937_64 rng(11);
    const auto p = random_dist(rng, 4);
    const auto g = random_gibbs(rng, 4);
    const auto c = thermo_curve(p, g);
    EXPECT_EQ(curve_eval(c, 0.0), 0.0);
    EXPECT_EQ(curve_eval(c, 1.0), 1.0);
    EXPECT_THROW(curve_eval(c, 1.5), InvalidInput);
    EXPECT_THROW(curve_eval(c, -0.1), InvalidInput);
    for (const auto& k : c.knots) EXPECT_DOUBLE_EQ(curve_eval(c, k.x), k.y);
}

TEST(Curve, ConcaveForRandomStates) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = 2 + t % 6;
        const auto p = random_dist(rng, d);
        const auto g = random_gibbs(rng, d);
        const auto c = thermo_curve(p, g);
        for (std::size_t k = 1; k < c.knots.size(); ++k) EXPECT_GT(c.knots[k].x, c.knots[k - 1].x);
        for (std::size_t k = 2; k < c.knots.size(); ++k) {
            const double s1 = (c.knots[k - 1].y - c.knots[k - 2].y) / (c.knots[k - 1].x - c.knots[k - 2].x);
            const double s2 = (c.knots[k].y - c.knots[k - 1].y) / (c.knots[k].x - c.knots[k - 1].x);
            EXPECT_LE(s2, s1 + 1e-10);
        }
    }
}

TEST(Thermomajorization, Basics) {
    const Distribution u{0.5, 0.5};
    EXPECT_TRUE(thermomajorizes(Distribution{1.0, 0.0}, Distribution{0.6, 0.4}, u));
    EXPECT_FALSE(thermomajorizes(Distribution{0.6, 0.4}, Distribution{1.0, 0.0}, u));
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        const auto p = random_dist(rng, 4);
        const auto g = random_gibbs(rng, 4);
        EXPECT_TRUE(thermomajorizes(p, g, g));
        EXPECT_TRUE(thermomajorizes(p, p, g));
        EXPECT_TRUE(thermomajorizes(g, g, g));
    }
}

TEST(Thermomajorization, TransitiveOnRandomTriples) {
    std::mt19937_64 rng(14);
    int chains = 0;
    for (int t = 0; t < 4000; ++t) {
        const std::size_t d = 2 + t % 4;
        const auto g = random_gibbs(rng, d);
        const auto a = random_dist(rng, d), b = random_dist(rng, d), c = random_dist(rng, d);
        if (thermomajorizes(a, b, g) && thermomajorizes(b, c, g)) {
            ++chains;
            EXPECT_TRUE(thermomajorizes(a, c, g));
        }
    }
    EXPECT_GT(chains, 50);
}

TEST(Thermomajorization, MatchesSortedSubsumsAtZeroBeta) {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t d = 2 + t % 7;
        const auto p = random_dist(rng, d), q = random_dist(rng, d);
        const Distribution u(std::vector<double>(d, 1.0 / static_cast<double>(d)));
        auto ps = p.probs(), qs = q.probs();
        std::sort(ps.rbegin(), ps.rend());
        std::sort(qs.rbegin(), qs.rend());
        bool major = true;
        double sp = 0, sq = 0;
        for (std::size_t k = 0; k < d; ++k) {
            sp += ps[k];
            sq += qs[k];
            if (sp < sq - 1e-12) major = false;
        }
        EXPECT_EQ(thermomajorizes(p, q, u), major);
    }
}

TEST(TotalVariation, Examples) {
    EXPECT_EQ(total_variation(Distribution{0.3, 0.7}, Distribution{0.3, 0.7}), 0.0);
    EXPECT_EQ(total_variation(Distribution{1.0, 0.0}, Distribution{0.0, 1.0}), 1.0);
    EXPECT_DOUBLE_EQ(total_variation(Distribution{1.0, 0.0}, Distribution{0.375, 0.625}), 0.625);
    EXPECT_THROW(total_variation(Distribution{1.0}, Distribution{0.5, 0.5}), InvalidInput);
}

TEST(TotalVariation, MetricProperties) {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_dist(rng, 5), b = random_dist(rng, 5), c = random_dist(rng, 5);
        EXPECT_DOUBLE_EQ(total_variation(a, b), total_variation(b, a));
        EXPECT_LE(total_variation(a, c), total_variation(a, b) + total_variation(b, c) + 1e-15);
        EXPECT_LE(total_variation(a, b), 1.0);
    }
}

TEST(RelativeEntropy, Examples) {
    const Distribution h{0.5, 0.5};
    EXPECT_EQ(relative_entropy(h, h), 0.0);
    EXPECT_NEAR(relative_entropy(Distribution{1.0, 0.0}, h), std::log(2.0), 1e-15);
    EXPECT_NEAR(relative_entropy(h, Distribution{2.0 / 3.0, 1.0 / 3.0}),
                0.5 * std::log(0.75) + 0.5 * std::log(1.5), 1e-15);
}

TEST(RelativeEntropy, NonNegativeAndZeroOnlyAtGibbs) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto p = random_dist(rng, 4);
        const auto g = random_gibbs(rng, 4);
        EXPECT_GE(relative_entropy(p, g), 0.0);
        EXPECT_NEAR(relative_entropy(g, g), 0.0, 1e-10);
        if (total_variation(p, g) > 1e-3) { EXPECT_GT(relative_entropy(p, g), 0.0); }
    }
}

TEST(Joint, TensorExamples) {
    const auto m = EnergySpectrum::trivial(2);
    const auto j = tensor(Distribution{1.0, 0.0}, Distribution{0.5, 0.5}, EnergySpectrum{0, 0}, m, 0.0);
    EXPECT_EQ(j.probs(), (std::vector<double>{0.5, 0.5, 0.0, 0.0}));
    const auto k = tensor(Distribution{0.5, 0.5}, Distribution{1.0 / 3, 2.0 / 3}, EnergySpectrum{0, 0}, m, 0.0);
    EXPECT_NEAR(k[0], 1.0 / 6, 1e-16);
    EXPECT_NEAR(k[1], 1.0 / 3, 1e-16);
    EXPECT_NEAR(k[2], 1.0 / 6, 1e-16);
    EXPECT_NEAR(k[3], 1.0 / 3, 1e-16);
    const Distribution p{0.2, 0.3, 0.5};
    const auto one = tensor(p, Distribution{1.0}, EnergySpectrum{0, 1, 2}, EnergySpectrum::trivial(1), 0.4);
    EXPECT_EQ(one.probs(), p.probs());
}

TEST(Joint, MarginalsOfQubitPairState) {
    const JointState j({0.125, 0.25, 0.375, 0.25}, EnergySpectrum{0, 0}, EnergySpectrum::trivial(2), 0.0);
    const auto s = marginalize(j, Keep::System);
    const auto m = marginalize(j, Keep::Memory);
    EXPECT_DOUBLE_EQ(s[0], 0.375);
    EXPECT_DOUBLE_EQ(s[1], 0.625);
    EXPECT_DOUBLE_EQ(m[0], 0.5);
    EXPECT_DOUBLE_EQ(m[1], 0.5);
    // Marginals (3/8, 5/8) and (1/2, 1/2).
    const double expected = 0.125 * std::log(0.125 / (0.375 * 0.5)) + 0.25 * std::log(0.25 / (0.375 * 0.5)) +
                            0.375 * std::log(0.375 / (0.625 * 0.5)) + 0.25 * std::log(0.25 / (0.625 * 0.5));
    EXPECT_NEAR(mutual_information(j), expected, 1e-15);
    EXPECT_GT(mutual_information(j), 0.0);
}

TEST(Joint, MutualInformationExamples) {
    const JointState corr({0.5, 0.0, 0.0, 0.5}, EnergySpectrum{0, 0}, EnergySpectrum::trivial(2), 0.0);
    EXPECT_NEAR(mutual_information(corr), std::log(2.0), 1e-15);
    std::mt19937_64 rng(18);
    const auto p = random_dist(rng, 3), q = random_dist(rng, 4);
    const auto prod = tensor(p, q, EnergySpectrum{0, 1, 2}, EnergySpectrum::trivial(4), 0.5);
    EXPECT_NEAR(mutual_information(prod), 0.0, 1e-15);
}

TEST(Joint, TensorMarginalizeRoundTrip) {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 50; ++t) {
        const auto p = random_dist(rng, 3), q = random_dist(rng, 5);
        const auto j = tensor(p, q, EnergySpectrum{0, 1, 2}, EnergySpectrum::trivial(5), 0.5);
        const auto ps = marginalize(j, Keep::System), qs = marginalize(j, Keep::Memory);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(ps[i], p[i], 1e-15);
        for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(qs[i], q[i], 1e-15);
        const auto again = tensor(ps, qs, EnergySpectrum{0, 1, 2}, EnergySpectrum::trivial(5), 0.5);
        for (std::size_t k = 0; k < 15; ++k) EXPECT_NEAR(again[k], j[k], 1e-15);
    }
}

TEST(Joint, GibbsIsProduct) {
    const JointState j({0.25, 0.25, 0.25, 0.25}, EnergySpectrum{0, 1}, EnergySpectrum{0, 2}, 0.5);
    const auto g = j.gibbs();
    const auto gs = gibbs_state(EnergySpectrum{0, 1}, 0.5), gm = gibbs_state(EnergySpectrum{0, 2}, 0.5);
    EXPECT_NEAR(g[j.index(1, 0)], gs[1] * gm[0], 1e-16);
    EXPECT_THROW(JointState({0.5, 0.5}, EnergySpectrum{0, 1}, EnergySpectrum{0, 2}, 0.5), InvalidInput);
}
