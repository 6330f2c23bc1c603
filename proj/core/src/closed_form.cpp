#include "memtp/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "memtp/errors.hpp"
#include "memtp/special.hpp"

namespace memtp {

namespace {

// Accumulates positive terms given by their logarithms.
class LogSum {
public:
    void add(double log_term) {
        if (log_term == -INFINITY) return;
        if (log_term > max_) {
            sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            sum_ += std::exp(log_term - max_);
        }
    }
    double log() const { return sum_ > 0.0 ? max_ + std::log(sum_) : -INFINITY; }

private:
    double max_ = -INFINITY;
    double sum_ = 0.0;
};

// Mixture b * exp(lb) + c * exp(lc) for nonnegative weights.
double mix(double b, double lb, double c, double lc) {
    double out = 0.0;
    if (b != 0.0) out += b * std::exp(lb);
    if (c != 0.0) out += c * std::exp(lc);
    return out;
}

// (1/N) sum_{m=0}^{N-1} (N-m) C(N+m-1, m) u^N v^m, in log form.
double log_error_sum(std::size_t n, double u, double v) {
    const double dn = static_cast<double>(n);
    const double lu = std::log(u), lv = std::log(v);
    LogSum s;
    double lc = 0.0; // log C(N-1, 0)
    for (std::size_t m = 0; m < n; ++m) {
        const double dm = static_cast<double>(m);
        if (m > 0) lc += std::log((dn + dm - 1.0) / dm);
        s.add(std::log(dn - dm) + lc + dn * lu + dm * lv);
    }
    return s.log() - std::log(dn);
}

} // namespace

PairGibbsFactors::PairGibbsFactors(double gamma_i) : gi_(gamma_i) {
    if (!(gamma_i > 0.0 && gamma_i < 1.0)) throw InvalidInput("PairGibbsFactors: gamma_i must lie in (0,1)");
}

PairGibbsFactors PairGibbsFactors::from(const Distribution& gamma, std::size_t i, std::size_t j) {
    if (i >= gamma.size() || j >= gamma.size() || i == j) throw InvalidInput("PairGibbsFactors: bad level pair");
    return PairGibbsFactors(gamma[i] / (gamma[i] + gamma[j]));
}

double closed_form_entry_b(std::size_t j, std::size_t k, std::size_t n, const PairGibbsFactors& pair, double b,
                           double c) {
    if (j < 1 || j > n || k > n) throw InvalidInput("closed_form_entry_b: index out of range");
    if (k == 0) return b;
    const double l12 = std::log(pair.gamma_i());
    const double l21 = std::log(pair.gamma_j());
    const double dj = static_cast<double>(j), dk = static_cast<double>(k);

    // c Γ12 Γ21^{j-1} sum_{i=0}^{k-1} C(j+i-1, i) Γ12^i
    LogSum sc;
    double lc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double di = static_cast<double>(i);
        if (i > 0) lc += std::log((dj + di - 1.0) / di);
        sc.add(lc + di * l12);
    }
    // b Γ12^k sum_{i=1}^{j} C(j+k-1-i, k-1) Γ21^{j-i}; run s = j - i from 0.
    LogSum sb;
    double lbin = 0.0; // log C(k-1, k-1)
    for (std::size_t s = 0; s < j; ++s) {
        const double ds = static_cast<double>(s);
        if (s > 0) lbin += std::log((dk - 1.0 + ds) / ds);
        sb.add(lbin + ds * l21);
    }
    return mix(c, l12 + (dj - 1.0) * l21 + sc.log(), b, dk * l12 + sb.log());
}

double closed_form_entry_c(std::size_t j, std::size_t n, const PairGibbsFactors& pair, double b, double c) {
    if (j < 1 || j > n) throw InvalidInput("closed_form_entry_c: index out of range");
    const double l12 = std::log(pair.gamma_i());
    const double l21 = std::log(pair.gamma_j());
    const double dj = static_cast<double>(j), dn = static_cast<double>(n);

    // c Γ21^N sum_{i=0}^{j-1} C(N+i-1, i) Γ12^i
    LogSum sc;
    double lc = 0.0;
    for (std::size_t i = 0; i < j; ++i) {
        const double di = static_cast<double>(i);
        if (i > 0) lc += std::log((dn + di - 1.0) / di);
        sc.add(lc + di * l12);
    }
    // b Γ21 Γ12^{j-1} sum_{i=0}^{N-1} C(i+j-1, j-1) Γ21^i
    LogSum sb;
    double lbin = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double di = static_cast<double>(i);
        if (i > 0) lbin += std::log((di + dj - 1.0) / di);
        sb.add(lbin + di * l21);
    }
    return mix(c, dn * l21 + sc.log(), b, l21 + (dj - 1.0) * l12 + sb.log());
}

double error_E(std::size_t n, const PairGibbsFactors& pair) {
    if (n < 1) throw InvalidInput("error_E: N must be >= 1");
    return std::exp(log_error_sum(n, pair.gamma_j(), pair.gamma_i()));
}

double error_F(std::size_t n, const PairGibbsFactors& pair) {
    if (n < 1) throw InvalidInput("error_F: N must be >= 1");
    return std::exp(log_error_sum(n, pair.gamma_i(), pair.gamma_j()));
}

double error_G(std::size_t n, const PairGibbsFactors& pair) {
    const double dn = static_cast<double>(n);
    const double gi = pair.gamma_i(), gj = pair.gamma_j();
    const double root = std::sqrt(std::numbers::pi * dn);
    if (std::abs(gi - gj) < 1e-9) return 1.0 / root;
    return gj * std::exp(dn * std::log(4.0 * gi * gj)) / ((dn + 1.0) * root * (gi - gj) * (gi - gj));
}

double error_E_asymptotic(std::size_t n, const PairGibbsFactors& pair) {
    const double dn = static_cast<double>(n);
    const double gi = pair.gamma_i(), gj = pair.gamma_j();
    const double root = std::sqrt(std::numbers::pi * dn);
    if (std::abs(gi - gj) < 1e-9) return 1.0 / root;
    return gi * std::exp(dn * std::log(4.0 * gi * gj)) / ((dn + 1.0) * root * (gi - gj) * (gi - gj));
}

Distribution reconstruct_final_state(const Distribution& p, std::size_t i, std::size_t j, std::size_t n,
                                     const PairGibbsFactors& pair) {
    if (i >= p.size() || j >= p.size() || i == j) throw InvalidInput("reconstruct_final_state: bad level pair");
    const double e = error_E(n, pair);
    const double f = error_F(n, pair);
    std::vector<double> q = p.probs();
    const double b = p[i], c = p[j];
    q[i] = b * f + c * (1.0 - e);
    q[j] = b * (1.0 - f) + c * e;
    return Distribution(std::move(q));
}

} // namespace memtp
