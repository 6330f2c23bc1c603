#include "memtp/cones.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "memtp/errors.hpp"
#include "memtp/kernels.hpp"

namespace memtp {

ExtremePoint extreme_point(const Distribution& p, const Distribution& gamma,
                           const std::vector<std::size_t>& order) {
    if (p.size() != gamma.size()) throw InvalidInput("extreme_point: length mismatch");
    if (order.size() != p.size() || !is_permutation_of_range(order)) {
        throw InvalidInput("extreme_point: order is not a permutation of the levels");
    }
    for (double g : gamma)
        if (!(g > 0.0)) throw InvalidInput("extreme_point: gamma must be strictly positive");
    auto q = kernels::lemma5_vertex(p.probs(), gamma.probs(), order);
    return {Distribution(std::move(q)), BetaOrder{order}};
}

std::vector<ExtremePoint> future_cone_vertices(const Distribution& p, const Distribution& gamma) {
    if (p.size() > kMaxConeDim) {
        throw CapacityError("future_cone_vertices: d = " + std::to_string(p.size()) + " exceeds " +
                            std::to_string(kMaxConeDim));
    }
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<ExtremePoint> out;
    do {
        ExtremePoint v = extreme_point(p, gamma, perm);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const ExtremePoint& w) {
            return total_variation(w.state, v.state) <= 1e-12;
        });
        if (!dup) out.push_back(std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw InvalidInput("Matrix product: shape mismatch");
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double v = a(i, k);
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += v * b(k, j);
        }
    return c;
}

std::vector<double> operator*(const Matrix& m, const std::vector<double>& v) {
    if (m.cols != v.size()) throw InvalidInput("Matrix-vector product: shape mismatch");
    std::vector<double> out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
    return out;
}

Matrix beta_swap_matrix(std::size_t i, std::size_t j, const Distribution& gamma) {
    if (i == j) throw InvalidInput("beta_swap_matrix: levels must differ");
    if (i >= gamma.size() || j >= gamma.size()) throw InvalidInput("beta_swap_matrix: level out of range");
    if (gamma[i] < gamma[j]) std::swap(i, j);
    const double e = gamma[j] / gamma[i];
    Matrix m = Matrix::identity(gamma.size());
    m(i, i) = 1.0 - e;
    m(i, j) = 1.0;
    m(j, i) = e;
    m(j, j) = 0.0;
    return m;
}

Distribution apply(const Matrix& m, const Distribution& p) { return Distribution(m * p.probs()); }

TranspositionChain decompose_neighbour_transpositions(const BetaOrder& from,
                                                      const std::vector<std::size_t>& target) {
    if (target.size() != from.size() || !is_permutation_of_range(target)) {
        throw InvalidInput("decompose_neighbour_transpositions: target is not a permutation");
    }
    std::vector<std::size_t> rank(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) rank[target[k]] = k;
    std::vector<std::size_t> cur = from.order;
    TranspositionChain chain;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
            if (rank[cur[k]] > rank[cur[k + 1]]) {
                chain.swaps.push_back({cur[k], cur[k + 1]});
                std::swap(cur[k], cur[k + 1]);
                changed = true;
            }
        }
    }
    return chain;
}

TranspositionChain decompose_neighbour_transpositions(const Distribution& p, const Distribution& gamma,
                                                      const std::vector<std::size_t>& target) {
    return decompose_neighbour_transpositions(beta_order(p, gamma), target);
}

BetaOrder apply_chain(const BetaOrder& from, const TranspositionChain& chain) {
    BetaOrder cur = from;
    auto pos = cur.positions();
    for (const Transposition& t : chain.swaps) {
        if (t.first >= pos.size() || t.second >= pos.size() || pos[t.first] + 1 != pos[t.second]) {
            throw InvalidInput("apply_chain: swap is not adjacent in the current beta-order");
        }
        std::swap(cur.order[pos[t.first]], cur.order[pos[t.second]]);
        std::swap(pos[t.first], pos[t.second]);
    }
    return cur;
}

std::size_t inversion_count(const std::vector<std::size_t>& from, const std::vector<std::size_t>& target) {
    std::vector<std::size_t> rank(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) rank[target[k]] = k;
    std::size_t inv = 0;
    for (std::size_t a = 0; a < from.size(); ++a)
        for (std::size_t b = a + 1; b < from.size(); ++b)
            if (rank[from[a]] > rank[from[b]]) ++inv;
    return inv;
}

std::vector<std::size_t> beta_cycle_permutation(const Distribution& p, const Distribution& gamma,
                                                const std::vector<std::size_t>& levels,
                                                CycleDirection direction) {
    const BetaOrder bo = beta_order(p, gamma);
    if (levels.size() < 2 || levels.size() > p.size()) throw InvalidInput("beta_cycle_permutation: need 2..d levels");
    const auto pos = bo.positions();
    for (std::size_t level : levels)
        if (level >= p.size()) throw InvalidInput("beta_cycle_permutation: level out of range");
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        if (pos[levels[k + 1]] != pos[levels[k]] + 1) {
            throw InvalidInput("beta_cycle_permutation: levels are not neighbouring in the beta-order");
        }
    }
    std::vector<std::size_t> out = bo.order;
    const auto first = out.begin() + static_cast<std::ptrdiff_t>(pos[levels.front()]);
    const auto last = first + static_cast<std::ptrdiff_t>(levels.size());
    if (direction == CycleDirection::Forward) {
        std::rotate(first, last - 1, last);
    } else {
        std::rotate(first, first + 1, last);
    }
    return out;
}

std::size_t count_non_overlapping_swaps(std::size_t d) {
    if (d == 0) return 1;
    if (d > 24) throw CapacityError("count_non_overlapping_swaps: d too large to enumerate");
    // A swap at position k pairs (k, k+1); choose subsets of the d-1 slots
    // with no two consecutive slots.
    const std::size_t slots = d - 1;
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        if ((mask & (mask >> 1)) == 0) ++count;
    }
    return count;
}

std::vector<CycleCompositionTarget> cycle_composition_targets(const BetaOrder& start) {
    const std::size_t d = start.size();
    std::vector<CycleCompositionTarget> out;
    std::vector<std::size_t> prev = start.order;
    for (std::size_t i = 1; i < d; ++i) {
        std::vector<std::size_t> row_last = prev;
        for (std::size_t j = 1; j + i <= d; ++j) {
            std::vector<std::size_t> o = prev;
            for (std::size_t k = 0; k < j; ++k) std::swap(o[k], o[k + 1]);
            out.push_back({i, j, o});
            row_last = o;
        }
        prev = row_last;
    }
    return out;
}

} // namespace memtp
