#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "memtp/closed_form.hpp"
#include "memtp/engine.hpp"
#include "memtp/errors.hpp"
#include "memtp/special.hpp"

using namespace memtp;

TEST(ClosedForm, InitialRound) {
    const PairGibbsFactors pair(0.6);
    EXPECT_DOUBLE_EQ(pair.gamma_j(), 1.0 - 0.6);
    for (std::size_t j = 1; j <= 5; ++j) EXPECT_EQ(closed_form_entry_b(j, 0, 5, pair, 0.37, 0.63), 0.37);
    EXPECT_THROW(closed_form_entry_b(0, 1, 5, pair, 0.5, 0.5), InvalidInput);
    EXPECT_THROW(closed_form_entry_b(6, 1, 5, pair, 0.5, 0.5), InvalidInput);
    EXPECT_THROW(closed_form_entry_b(1, 6, 5, pair, 0.5, 0.5), InvalidInput);
    EXPECT_THROW(closed_form_entry_c(0, 5, pair, 0.5, 0.5), InvalidInput);
    EXPECT_THROW(PairGibbsFactors(1.0), InvalidInput);
    EXPECT_THROW(PairGibbsFactors(0.0), InvalidInput);
}

TEST(ClosedForm, QubitMemoryAverages) {
    const PairGibbsFactors pair(0.5);
    const double sb = closed_form_entry_b(1, 2, 2, pair, 1, 0) + closed_form_entry_b(2, 2, 2, pair, 1, 0);
    const double sc = closed_form_entry_c(1, 2, pair, 1, 0) + closed_form_entry_c(2, 2, pair, 1, 0);
    EXPECT_NEAR(sb / 2, 0.375, 1e-15);
    EXPECT_NEAR(sc / 2, 0.625, 1e-15);
}

TEST(ClosedForm, PureLevelJReducesToIncBeta) {
    for (double gi : {0.5, 0.62, 0.8})
        for (std::size_t n : {1u, 4u, 30u}) {
            const PairGibbsFactors pair(gi);
            for (std::size_t j = 1; j <= n; ++j)
                EXPECT_NEAR(closed_form_entry_c(j, n, pair, 0, 1), reg_inc_beta(pair.gamma_j(), n, j), 1e-13);
        }
}

TEST(ErrorFunctions, QubitMemoryExample) {
    const PairGibbsFactors pair(0.5);
    EXPECT_NEAR(error_E(2, pair), 0.375, 1e-15);
    EXPECT_NEAR(error_F(2, pair), 0.375, 1e-15);
    EXPECT_NEAR(error_F(1, pair), 0.5, 1e-15);
}

TEST(ErrorFunctions, ZeroBetaLimit) {
    const PairGibbsFactors pair(0.5);
    for (std::size_t n : {256u, 1024u, 4096u}) {
        EXPECT_NEAR(error_F(n, pair) * std::sqrt(M_PI * n), 1.0, 0.01);
        EXPECT_NEAR(error_G(n, pair), 1 / std::sqrt(M_PI * n), 1e-16);
        EXPECT_NEAR(error_E_asymptotic(n, pair), 1 / std::sqrt(M_PI * n), 1e-16);
    }
}

TEST(ErrorFunctions, BiasedLimit) {
    const PairGibbsFactors pair(2.0 / 3.0);
    const double limit = 1.0 - pair.gamma_j() / pair.gamma_i();
    for (std::size_t n : {64u, 128u}) {
        const double excess = error_F(n, pair) - limit;
        EXPECT_NEAR(excess / error_G(n, pair), 1.0, 0.15) << n;
        EXPECT_NEAR(error_E(n, pair) / error_E_asymptotic(n, pair), 1.0, 0.15) << n;
    }
    const double r32 = (error_F(32, pair) - limit) / error_G(32, pair);
    const double r128 = (error_F(128, pair) - limit) / error_G(128, pair);
    EXPECT_LT(std::abs(r128 - 1), std::abs(r32 - 1));
}

TEST(ErrorFunctions, LargeMemoryIsFinite) {
    const PairGibbsFactors pair(0.55);
    const double e = error_E(4096, pair), f = error_F(4096, pair);
    EXPECT_TRUE(std::isfinite(e));
    EXPECT_TRUE(std::isfinite(f));
    EXPECT_GE(e, 0.0);
    EXPECT_LE(f, 1.0);
}

TEST(Reconstruction, MatchesEngine) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 2 + t % 3;
        const std::size_t n = 1 + t % 40;
        std::vector<double> e(d), p(d);
        double s = 0;
        for (std::size_t k = 0; k < d; ++k) {
            e[k] = 2 * u(rng);
            s += (p[k] = u(rng));
        }
        for (double& x : p) x /= s;
        const EnergySpectrum sys(e);
        const double beta = 2 * u(rng);
        const Distribution pd(p);
        const std::size_t i = t % d, j = (t + 1) % d;
        const auto g = gibbs_state(sys, beta);
        const auto q = reconstruct_final_state(pd, i, j, n, PairGibbsFactors::from(g, i, j));
        const auto r = run_full_swap(pd, sys, beta, i, j, n);
        for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(q[k], r[k], 1e-10);
    }
}
