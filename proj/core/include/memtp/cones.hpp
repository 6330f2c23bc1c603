/**
 * @file cones.hpp
 * @brief Extreme points of the future thermal cone, beta-swap matrices,
 *        beta-cycles and neighbour-transposition chains.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "memtp/thermo.hpp"

namespace memtp {

inline constexpr std::size_t kMaxConeDim = 8;

struct ExtremePoint {
    Distribution state;
    BetaOrder order;
};

/// Lemma-5 vertex of the cone of p with beta-order `order` (level per position).
ExtremePoint extreme_point(const Distribution& p, const Distribution& gamma,
                           const std::vector<std::size_t>& order);

/// All d! candidates, deduplicated at total variation 1e-12. Throws
/// CapacityError for d > kMaxConeDim.
std::vector<ExtremePoint> future_cone_vertices(const Distribution& p, const Distribution& gamma);

/// Dense row-major matrix; only used for small d.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    static Matrix identity(std::size_t n);
    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& m, const std::vector<double>& v);

/// Column-stochastic beta-swap on levels i, j. The lower-energy (larger
/// gamma) level takes the role of i regardless of argument order.
Matrix beta_swap_matrix(std::size_t i, std::size_t j, const Distribution& gamma);

Distribution apply(const Matrix& m, const Distribution& p);

/// A swap of two levels that sit at adjacent positions of the current
/// beta-order; `first` is the one ahead.
struct Transposition {
    std::size_t first;
    std::size_t second;
    bool operator==(const Transposition&) const = default;
};

struct TranspositionChain {
    std::vector<Transposition> swaps;
    std::size_t size() const { return swaps.size(); }
    bool empty() const { return swaps.empty(); }
};

/// Bubble-sort decomposition of `from` into `target` by adjacent swaps.
TranspositionChain decompose_neighbour_transpositions(const BetaOrder& from,
                                                      const std::vector<std::size_t>& target);
TranspositionChain decompose_neighbour_transpositions(const Distribution& p, const Distribution& gamma,
                                                      const std::vector<std::size_t>& target);

/// Applies the chain to `from`. Throws if a swap is not adjacent at its turn.
BetaOrder apply_chain(const BetaOrder& from, const TranspositionChain& chain);

std::size_t inversion_count(const std::vector<std::size_t>& from, const std::vector<std::size_t>& target);

enum class CycleDirection {
    Forward,  ///< the level at the back of the block moves to the front
    Backward, ///< the level at the front of the block moves to the back
};

/// Target beta-order after a beta-cycle on `levels`, which must occupy
/// consecutive positions of the beta-order of p in the listed order.
std::vector<std::size_t> beta_cycle_permutation(const Distribution& p, const Distribution& gamma,
                                                const std::vector<std::size_t>& levels,
                                                CycleDirection direction);

/// Number of ways to place non-overlapping neighbour swaps on d positions
/// (including none). Equals the Fibonacci number F(d+1).
std::size_t count_non_overlapping_swaps(std::size_t d);

/// Orders reached by moving the front element back j positions, row by row:
/// row i (1-based) applies to the last order of row i-1, with j = 1..d-i.
/// Returned in row-major (i, j) order; there are d(d-1)/2 of them.
struct CycleCompositionTarget {
    std::size_t i;
    std::size_t j;
    std::vector<std::size_t> order;
};
std::vector<CycleCompositionTarget> cycle_composition_targets(const BetaOrder& start);

} // namespace memtp
