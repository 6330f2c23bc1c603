#include "memtp/special.hpp"

#include <cmath>
#include <algorithm>

#include "memtp/errors.hpp"

namespace memtp {

namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a,b).
double beta_cf(double x, double a, double b) {
    constexpr int kMaxIter = 100000;
    constexpr double kEps = 1e-16;
    constexpr double kTiny = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    return h;
}

} // namespace

double log_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double reg_inc_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw InvalidInput("reg_inc_beta: a and b must be positive and finite");
    }
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("reg_inc_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return std::exp(log_front) * beta_cf(x, a, b) / a;
    }
    return 1.0 - std::exp(log_front) * beta_cf(1.0 - x, b, a) / b;
}

double reg_inc_beta_binomial(double x, std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) throw InvalidInput("reg_inc_beta_binomial: a and b must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("reg_inc_beta_binomial: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const std::uint32_t n = a + b - 1;
    const double lx = std::log(x);
    const double l1x = std::log1p(-x);
    double sum = 0.0;
    for (std::uint32_t j = a; j <= n; ++j) {
        sum += std::exp(log_binomial(n, j) + j * lx + (n - j) * l1x);
    }
    return std::min(sum, 1.0);
}

} // namespace memtp
