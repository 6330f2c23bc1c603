#include "memtp/schedule.hpp"

#include <string>

#include "memtp/errors.hpp"

namespace memtp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::Default: return "default";
    case Family::Blue: return "blue";
    case Family::Red: return "red";
    case Family::Cyan: return "cyan";
    case Family::Orange: return "orange";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Default, Family::Blue, Family::Red, Family::Cyan, Family::Orange}) {
        if (family_name(f) == name) return f;
    }
    throw InvalidInput("unknown traversal family '" + std::string(name) + "'");
}

std::vector<bool> cyan_choices(std::uint64_t variant, std::size_t n) {
    // At most 2N - 1 segments are needed before one index runs out.
    const std::size_t len = 2 * n;
    if (variant == 0) return detail::alternating(n, false);
    std::vector<bool> v(len);
    std::uint64_t state = variant;
    std::uint64_t bits = 0;
    for (std::size_t s = 0; s < len; ++s) {
        if (s % 64 == 0) bits = splitmix64(state);
        v[s] = (bits >> (s % 64)) & 1U;
    }
    return v;
}

ProtocolSchedule build_schedule(const Traversal& t, std::size_t i, std::size_t j, std::size_t n) {
    if (i == j) throw InvalidInput("build_schedule: levels must differ");
    if (n == 0) throw InvalidInput("build_schedule: memory dimension must be >= 1");
    ProtocolSchedule s;
    s.traversal = t;
    s.swap_target = {i, j};
    s.steps.reserve(n * n);
    visit_grid(t, n, [&](std::size_t k, std::size_t l) { s.steps.emplace_back(i * n + k, j * n + l); });
    return s;
}

} // namespace memtp
