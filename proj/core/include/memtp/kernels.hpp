/**
 * @file kernels.hpp
 * @brief Scalar-generic kernels shared by the double-precision API and the
 *        extended-precision sweeps.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "memtp/schedule.hpp"

namespace memtp {

enum class Mode { Full, Truncated };

namespace kernels {

/// Full thermalisation of entries a and b against Gibbs weights g.
template <class Real>
inline void thermalize_pair(Real* r, const Real* g, std::size_t a, std::size_t b) {
    const Real s = r[a] + r[b];
    const Real ra = s * g[a] / (g[a] + g[b]);
    r[a] = ra;
    r[b] = s - ra;
}

template <class Real>
std::vector<std::size_t> beta_order(const std::vector<Real>& p, const std::vector<Real>& g) {
    std::vector<std::size_t> o(p.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return p[a] / g[a] > p[b] / g[b]; });
    return o;
}

/// Lemma-5 extreme point of the future thermal cone of p whose beta-order is
/// `target` (target[k] = level at position k).
template <class Real>
std::vector<Real> lemma5_vertex(const std::vector<Real>& p, const std::vector<Real>& g,
                                const std::vector<std::size_t>& target) {
    const std::size_t d = p.size();
    const auto src = beta_order(p, g);
    std::vector<Real> kx(d + 1), ky(d + 1);
    kx[0] = 0;
    ky[0] = 0;
    for (std::size_t k = 0; k < d; ++k) {
        kx[k + 1] = kx[k] + g[src[k]];
        ky[k + 1] = ky[k] + p[src[k]];
    }
    kx[d] = 1;
    ky[d] = 1;
    auto f = [&](const Real& x) -> Real {
        if (x <= 0) return Real(0);
        if (x >= 1) return Real(1);
        std::size_t hi = 1;
        while (hi < d && kx[hi] < x) ++hi;
        if (kx[hi] == x) return ky[hi];
        const Real t = (x - kx[hi - 1]) / (kx[hi] - kx[hi - 1]);
        return ky[hi - 1] + t * (ky[hi] - ky[hi - 1]);
    };
    std::vector<Real> q(d);
    Real x = 0, yprev = 0;
    for (std::size_t k = 0; k < d; ++k) {
        x += g[target[k]];
        const Real y = (k + 1 == d) ? Real(1) : f(x);
        q[target[k]] = y - yprev;
        yprev = y;
    }
    return q;
}

/// Composed protocol on p (x) gamma_m for the listed level pairs. In Full
/// mode the memory is re-thermalised after each swap block; in Truncated mode
/// only once at the end. Returns the system marginal.
template <class Real>
std::vector<Real> composed_marginal(const std::vector<Real>& p, const std::vector<Real>& gs,
                                    const std::vector<Real>& gm,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& swaps,
                                    Mode mode, const Traversal& traversal) {
    const std::size_t d = p.size();
    const std::size_t n = gm.size();
    std::vector<Real> r(d * n), g(d * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            r[i * n + j] = p[i] * gm[j];
            g[i * n + j] = gs[i] * gm[j];
        }
    auto marginal = [&] {
        std::vector<Real> m(d, Real(0));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i] += r[i * n + j];
        return m;
    };
    for (const auto& [a, b] : swaps) {
        Real* rp = r.data();
        const Real* gp = g.data();
        visit_grid(traversal, n, [&](std::size_t k, std::size_t l) { thermalize_pair(rp, gp, a * n + k, b * n + l); });
        if (mode == Mode::Full) {
            const auto m = marginal();
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < n; ++j) r[i * n + j] = m[i] * gm[j];
        }
    }
    return marginal();
}

template <class Real>
Real total_variation(const std::vector<Real>& a, const std::vector<Real>& b) {
    Real s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] > b[i]) ? Real(a[i] - b[i]) : Real(b[i] - a[i]);
    return s / 2;
}

} // namespace kernels
} // namespace memtp
