/**
 * @file special.hpp
 * @brief Regularised incomplete beta function and binomial helpers.
 */
#pragma once

#include <cstdint>

namespace memtp {

/// I_x(a, b) by continued fraction, using I_x(a,b) = 1 - I_{1-x}(b,a) when
/// x lies above (a+1)/(a+b+2).
double reg_inc_beta(double x, double a, double b);

/// I_x(a, b) for positive integers a, b as a binomial tail sum,
/// sum_{j=a}^{a+b-1} C(a+b-1, j) x^j (1-x)^{a+b-1-j}.
double reg_inc_beta_binomial(double x, std::uint32_t a, std::uint32_t b);

/// log C(n, k).
double log_binomial(double n, double k);

} // namespace memtp
