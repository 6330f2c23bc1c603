/**
 * @file schedule.hpp
 * @brief Traversal orders of the N x N grid of two-level thermalisations that
 *        make up one truncated beta-swap protocol.
 *
 * Grid point (k, l) thermalises joint entries (i*N + k, j*N + l) for the
 * swapped system levels (i, j). A "column" is a fixed k, a "row" a fixed l.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace memtp {

enum class Family { Default, Blue, Red, Cyan, Orange };

/// Family plus member id. The id only matters for Cyan and Orange.
struct Traversal {
    Family family = Family::Default;
    std::uint64_t variant = 0;
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct ProtocolSchedule {
    std::vector<std::pair<std::size_t, std::size_t>> steps;
    Traversal traversal;
    std::pair<std::size_t, std::size_t> swap_target{0, 1};
};

/// Segment choices of a Cyan member: true = next column, false = next row.
std::vector<bool> cyan_choices(std::uint64_t variant, std::size_t n);

namespace detail {

/// Walk the grid by segments. A column segment visits (c, l) for l >= r and
/// then increments c; a row segment visits (k, r) for k >= c and increments r.
template <class F>
void walk_segments(const std::vector<bool>& choices, std::size_t n, F&& f) {
    std::size_t c = 0, r = 0;
    for (bool column : choices) {
        if (c == n || r == n) break;
        if (column) {
            for (std::size_t l = r; l < n; ++l) f(c, l);
            ++c;
        } else {
            for (std::size_t k = c; k < n; ++k) f(k, r);
            ++r;
        }
    }
}

/// The same walk run backwards with both coordinates mirrored.
template <class F>
void walk_segments_reversed(const std::vector<bool>& choices, std::size_t n, F&& f) {
    struct Seg {
        bool column;
        std::size_t c, r;
    };
    std::vector<Seg> segs;
    std::size_t c = 0, r = 0;
    for (bool column : choices) {
        if (c == n || r == n) break;
        segs.push_back({column, c, r});
        column ? ++c : ++r;
    }
    const std::size_t m = n - 1;
    for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
        if (it->column) {
            for (std::size_t l = n; l-- > it->r;) f(m - it->c, m - l);
        } else {
            for (std::size_t k = n; k-- > it->c;) f(m - k, m - it->r);
        }
    }
}

inline std::vector<bool> alternating(std::size_t n, bool first) {
    std::vector<bool> v(2 * n);
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = (s % 2 == 0) ? first : !first;
    return v;
}

} // namespace detail

/// Calls f(k, l) for each of the N^2 grid points in traversal order.
template <class F>
void visit_grid(const Traversal& t, std::size_t n, F&& f) {
    switch (t.family) {
    case Family::Default:
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) f(k, l);
        return;
    case Family::Blue:
        detail::walk_segments(detail::alternating(n, true), n, f);
        return;
    case Family::Red:
        detail::walk_segments_reversed(detail::alternating(n, true), n, f);
        return;
    case Family::Cyan:
        detail::walk_segments(cyan_choices(t.variant, n), n, f);
        return;
    case Family::Orange:
        detail::walk_segments_reversed(cyan_choices(t.variant, n), n, f);
        return;
    }
}

/// Materialised schedule over joint indices for system levels (i, j).
ProtocolSchedule build_schedule(const Traversal& t, std::size_t i, std::size_t j, std::size_t n);

} // namespace memtp
