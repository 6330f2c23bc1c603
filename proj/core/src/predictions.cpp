#include "memtp/predictions.hpp"

#include <cmath>
#include <numbers>

#include "memtp/errors.hpp"

namespace memtp {

namespace {

Matrix transposition(std::size_t a, std::size_t b, std::size_t d) {
    Matrix m = Matrix::identity(d);
    m(a, a) = 0.0;
    m(b, b) = 0.0;
    m(a, b) = 1.0;
    m(b, a) = 1.0;
    return m;
}

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidInput(msg);
}

// Ordinary least squares y = s x + t.
std::pair<double, double> line_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx += x[k];
        sy += y[k];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    require(sxx > 0.0, "fit: abscissae must not all coincide");
    const double s = sxy / sxx;
    return {s, my - s * mx};
}

} // namespace

std::string_view rate_model_name(RateModel m) {
    switch (m) {
    case RateModel::Lemma1: return "lemma1";
    case RateModel::Theorem1Delta: return "theorem1-delta";
    case RateModel::Corollary1: return "corollary1";
    case RateModel::Corollary2: return "corollary2";
    case RateModel::Theorem2: return "theorem2";
    case RateModel::Conjecture2Fit: return "conjecture2-fit";
    }
    return "unknown";
}

Matrix delta_operator(const TranspositionChain& chain, std::size_t d) {
    const std::size_t m = chain.size();
    std::vector<Matrix> t;
    t.reserve(m);
    for (const Transposition& s : chain.swaps) {
        require(s.first < d && s.second < d && s.first != s.second, "delta_operator: swap out of range");
        t.push_back(transposition(s.first, s.second, d));
    }
    Matrix delta(d, d);
    for (std::size_t l = 0; l < m; ++l) {
        Matrix left = Matrix::identity(d);
        for (std::size_t k = l + 1; k < m; ++k) left = t[k] * left;
        Matrix right = Matrix::identity(d);
        for (std::size_t k = 0; k < l; ++k) right = t[k] * right;
        Matrix mid = Matrix::identity(d);
        for (std::size_t q = 0; q < mid.data.size(); ++q) mid.data[q] -= t[l].data[q];
        const Matrix term = left * mid * right;
        for (std::size_t q = 0; q < delta.data.size(); ++q) delta.data[q] += term.data[q];
    }
    return delta;
}

double predict_delta(RateModel model, const RateParams& prm, std::size_t n) {
    require(n >= 1, "predict_delta: N must be >= 1");
    const double dn = static_cast<double>(n);
    const double eps = 1.0 / std::sqrt(std::numbers::pi * dn);
    switch (model) {
    case RateModel::Lemma1:
        if (prm.p.empty()) return eps;
        require(prm.i < prm.p.size() && prm.j < prm.p.size(), "Lemma1: level out of range");
        return eps * std::abs(prm.p[prm.i] - prm.p[prm.j]);
    case RateModel::Theorem1Delta: {
        const std::size_t d = prm.p.size();
        require(d >= 1, "Theorem1Delta: state required");
        const auto dp = delta_operator(prm.chain, d) * prm.p;
        double s = 0.0;
        for (double v : dp) s += std::abs(v);
        return 0.5 * eps * s;
    }
    case RateModel::Corollary1:
        return static_cast<double>(prm.d * (prm.d - 1)) / 2.0 * eps;
    case RateModel::Corollary2: {
        double s = 0.0;
        for (std::size_t a : prm.levels)
            for (std::size_t b : prm.levels) {
                require(a < prm.p.size() && b < prm.p.size(), "Corollary2: level out of range");
                if (a != b) s += std::abs(prm.p[a] - prm.p[b]);
            }
        return 0.5 * eps * s;
    }
    case RateModel::Theorem2: {
        require(prm.i < prm.p.size() && prm.j < prm.p.size() && prm.i != prm.j, "Theorem2: bad level pair");
        require(prm.gamma.size() == prm.p.size(), "Theorem2: gamma required");
        const double gi = prm.gamma[prm.i] / (prm.gamma[prm.i] + prm.gamma[prm.j]);
        const double gj = 1.0 - gi;
        if (std::abs(gi - gj) < 1e-9) {
            if (!prm.lemma1_fallback) {
                throw InvalidInput("Theorem2: Gamma_i == Gamma_j is singular; use the Lemma1 model");
            }
            return eps * std::abs(prm.p[prm.i] - prm.p[prm.j]);
        }
        const double weight = std::abs(prm.p[prm.i] * gj - prm.p[prm.j] * gi);
        return std::exp(dn * std::log(4.0 * gi * gj)) / ((gi - gj) * (gi - gj)) * weight /
               ((dn + 1.0) * std::sqrt(std::numbers::pi * dn));
    }
    case RateModel::Conjecture2Fit:
        return std::exp(-prm.A * dn - 1.5 * std::log(dn) + prm.c);
    }
    throw InvalidInput("predict_delta: unknown model");
}

Conjecture2Fit fit_conjecture2(const std::vector<std::pair<double, double>>& series) {
    require(series.size() >= 4, "fit_conjecture2: need at least 4 points");
    std::vector<double> x, y;
    for (const auto& [n, delta] : series) {
        require(delta > 0.0, "fit_conjecture2: delta must be positive");
        require(n > 0.0, "fit_conjecture2: N must be positive");
        x.push_back(n);
        y.push_back(std::log(delta) + 1.5 * std::log(n));
    }
    const auto [s, t] = line_fit(x, y);
    Conjecture2Fit fit{-s, t, 0.0};
    double rr = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double r = y[k] - (s * x[k] + t);
        rr += r * r;
    }
    fit.residual = std::sqrt(rr);
    return fit;
}

double loglog_slope(const std::vector<std::pair<double, double>>& series) {
    require(series.size() >= 2, "loglog_slope: need at least 2 points");
    std::vector<double> x, y;
    for (const auto& [n, delta] : series) {
        require(n > 0.0 && delta > 0.0, "loglog_slope: values must be positive");
        x.push_back(std::log(n));
        y.push_back(std::log(delta));
    }
    return line_fit(x, y).first;
}

} // namespace memtp
