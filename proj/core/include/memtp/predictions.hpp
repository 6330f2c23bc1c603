/**
 * @file predictions.hpp
 * @brief Leading-order convergence predictions for the memory-assisted
 *        protocols and the exponential-rate fit.
 */
#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "memtp/cones.hpp"

namespace memtp {

enum class RateModel { Lemma1, Theorem1Delta, Corollary1, Corollary2, Theorem2, Conjecture2Fit };

std::string_view rate_model_name(RateModel m);

/// Inputs for the models; each model reads only the fields it needs.
struct RateParams {
    std::vector<double> p;             ///< Lemma1 (optional), Theorem1Delta, Corollary2, Theorem2
    std::vector<double> gamma;         ///< Theorem2
    TranspositionChain chain;          ///< Theorem1Delta
    std::vector<std::size_t> levels;   ///< Corollary2
    std::size_t i = 0;                 ///< Lemma1, Theorem2
    std::size_t j = 1;                 ///< Lemma1, Theorem2
    std::size_t d = 2;                 ///< Corollary1
    double A = 0.0;                    ///< Conjecture2Fit
    double c = 0.0;                    ///< Conjecture2Fit
    bool lemma1_fallback = false;      ///< Theorem2 at Gamma_i == Gamma_j
};

/// Predicted total-variation distance for memory size n.
/// Theorem2 with |Gamma_i - Gamma_j| < 1e-9 throws InvalidInput unless
/// lemma1_fallback is set.
double predict_delta(RateModel model, const RateParams& params, std::size_t n);

struct RatePrediction {
    RateModel model;
    RateParams params;
    double predicted_delta(std::size_t n) const { return predict_delta(model, params, n); }
};

/// Correction operator Delta for a chain of plain transpositions:
/// sum_l (P_m..P_{l+1}) (1 - P_l) (P_{l-1}..P_1).
Matrix delta_operator(const TranspositionChain& chain, std::size_t d);

struct Conjecture2Fit {
    double A = 0.0;
    double c = 0.0;
    double residual = 0.0; ///< 2-norm of the residuals in log space
};

/// Least squares for log delta = -A N - 1.5 log N + c over (N, delta) points.
Conjecture2Fit fit_conjecture2(const std::vector<std::pair<double, double>>& series);

/// Least-squares slope of log delta against log N.
double loglog_slope(const std::vector<std::pair<double, double>>& series);

} // namespace memtp
